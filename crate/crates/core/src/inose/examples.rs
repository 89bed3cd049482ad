//! The two worked examples (isogenies of degree 5 and 6) with every stored
//! intermediate, and a stage-by-stage comparison against a pipeline run.

use serde::Serialize;

use crate::algebra::rational::format_rational;
use crate::algebra::{parse_poly, RatFunc, Rational, RfPoly, UniPoly, Var};
use crate::curves::{ProjPoint, TriPoly};
use crate::elliptic::{verify_isogeny, EllipticCurve, RationalMap};
use crate::error::Result;

use super::data::inose_coefficients;
use super::fit::{fit_degree, fitting_system};
use super::pipeline::Setup;
use super::section::assemble_section;
use super::split::Sign;

/// Embedded example data. Polynomials are stored as expression strings.
#[derive(Clone, Debug)]
pub struct WorkedExample {
    pub name: &'static str,
    pub e1: [i64; 3],
    pub e2: [i64; 3],
    pub x_num: &'static str,
    pub x_den: &'static str,
    pub y_num: &'static str,
    pub y_den: &'static str,
    pub degree: u32,
    /// `[A, B, delta1, delta2]` as exact rationals.
    pub coefficients: [&'static str; 4],
    /// Coefficients of `p+` in `x1^0, x1^1, ...`, as polynomials in `u`.
    pub p_plus: &'static [&'static str],
    pub q_plus: &'static [([u32; 3], &'static str)],
    pub point: [String; 3],
    pub f: &'static str,
    pub g: &'static str,
    pub h: &'static str,
    /// `Y = y_factor * g / (512 h^3)`.
    pub y_factor: &'static str,
    pub height: i64,
}

fn poly(text: &str, var: Var) -> UniPoly {
    parse_poly(text, var).expect("embedded polynomial parses")
}

fn rf(text: &str, var: Var) -> RatFunc {
    RatFunc::from_poly(&poly(text, var))
}

impl WorkedExample {
    pub fn curves(&self) -> Result<(EllipticCurve, EllipticCurve)> {
        let [a2, a4, a6] = self.e1;
        let [b2, b4, b6] = self.e2;
        Ok((
            EllipticCurve::from_ints(a2, a4, a6)?,
            EllipticCurve::from_ints(b2, b4, b6)?,
        ))
    }

    pub fn map(&self) -> Result<RationalMap> {
        RationalMap::new(
            poly(self.x_num, Var::X1),
            poly(self.x_den, Var::X1),
            poly(self.y_num, Var::X1),
            poly(self.y_den, Var::X1),
            self.degree,
        )
    }

    pub fn expected_coefficients(&self) -> [Rational; 4] {
        self.coefficients
            .map(|c| crate::algebra::parse_rational(c).expect("embedded rational parses"))
    }

    pub fn expected_p_plus(&self) -> RfPoly {
        RfPoly::new(
            Var::X1,
            Var::U,
            self.p_plus.iter().map(|c| rf(c, Var::U)).collect(),
        )
    }

    pub fn expected_q_plus(&self) -> TriPoly {
        TriPoly::from_terms(
            fit_degree(self.degree),
            Var::U,
            self.q_plus.iter().map(|(e, c)| (*e, rf(c, Var::U))),
        )
    }

    pub fn expected_point(&self) -> ProjPoint {
        ProjPoint::new(self.point.clone().map(|c| poly(&c, Var::U))).expect("nonzero point")
    }

    /// `f / (192 h^2)`.
    pub fn expected_x(&self) -> RatFunc {
        let h = poly(self.h, Var::S);
        let den = (&h * &h).scale(&Rational::from_integer(192.into()));
        RatFunc::new(&poly(self.f, Var::S), &den).expect("nonzero")
    }

    /// `y_factor * g / (512 h^3)`.
    pub fn expected_y(&self) -> RatFunc {
        let h = poly(self.h, Var::S);
        let den = (&(&h * &h) * &h).scale(&Rational::from_integer(512.into()));
        let num = &poly(self.y_factor, Var::S) * &poly(self.g, Var::S);
        RatFunc::new(&num, &den).expect("nonzero")
    }
}

/// Looks up an embedded example by name (`d5` or `d6`).
pub fn worked_example(name: &str) -> Option<WorkedExample> {
    match name {
        "d5" => Some(degree_five()),
        "d6" => Some(degree_six()),
        _ => None,
    }
}

/// One row of a comparison report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StageResult {
    pub stage: String,
    pub passed: bool,
    pub detail: String,
}

fn stage(name: &str, passed: bool, detail: impl Into<String>) -> StageResult {
    StageResult {
        stage: name.to_string(),
        passed,
        detail: detail.into(),
    }
}

/// `a = c * b` for a nonzero `c` in `Q(u)` (coefficientwise).
fn proportional(a: &RfPoly, b: &RfPoly) -> bool {
    if a.degree() != b.degree() || a.is_zero() {
        return false;
    }
    let top = a.degree().expect("nonzero");
    let c = a.coeff(top).checked_div(&b.coeff(top)).expect("nonzero");
    c.as_constant().is_some() && (0..=top).all(|k| a.coeff(k) == &c * &b.coeff(k))
}

fn shape(f: &RatFunc) -> String {
    format!("exact; degrees {}/{} in s", f.num_degree(), f.den_degree())
}

/// Runs the pipeline on `ex`, comparing each stage with the embedded values.
/// Stages after a pipeline error are reported as failed.
pub fn verify_example(ex: &WorkedExample) -> Vec<StageResult> {
    let mut out = Vec::new();
    let fail_rest = |out: &mut Vec<StageResult>, names: &[&str], why: &str| {
        for n in names {
            out.push(stage(n, false, format!("not reached: {why}")));
        }
    };
    const LATER: [&str; 7] = [
        "split p+",
        "split p-",
        "expected q+ in fitted family",
        "ninth point Q+",
        "ninth point Q-",
        "section X",
        "section Y",
    ];
    let (e1, e2, phi) = match (ex.curves(), ex.map()) {
        (Ok((e1, e2)), Ok(phi)) => (e1, e2, phi),
        (Err(e), _) | (_, Err(e)) => {
            out.push(stage("input", false, e.to_string()));
            return out;
        }
    };
    let report = verify_isogeny(&e1, &e2, &phi);
    out.push(stage(
        "isogeny",
        report.passed(),
        format!("degree {}", report.declared_degree),
    ));
    match inose_coefficients(&e1, &e2) {
        Ok(d) => {
            let got = [d.a, d.b, d.delta1, d.delta2];
            let ok = got == ex.expected_coefficients();
            let text: Vec<String> = got.iter().map(format_rational).collect();
            out.push(stage(
                "coefficients A, B, delta1, delta2",
                ok,
                text.join(", "),
            ));
        }
        Err(e) => out.push(stage(
            "coefficients A, B, delta1, delta2",
            false,
            e.to_string(),
        )),
    }
    let setup = match Setup::new(&e1, &e2, &phi) {
        Ok(s) => s,
        Err(e) => {
            fail_rest(&mut out, &LATER, e.name());
            out.push(stage("height", false, "not reached"));
            return out;
        }
    };
    let p_expected = ex.expected_p_plus();
    out.push(stage(
        "split p+",
        proportional(&setup.pair.p_plus, &p_expected),
        "up to a rational scalar",
    ));
    let p_minus_expected = p_expected.map_coeffs(RatFunc::negate_var);
    out.push(stage(
        "split p-",
        proportional(&setup.pair.p_minus, &p_minus_expected),
        "u -> -u of p+",
    ));
    let q_ok = {
        let points: Vec<&ProjPoint> = if ex.degree % 2 == 1 {
            vec![&setup.origin, &setup.origin_bar]
        } else {
            vec![]
        };
        match fitting_system(&phi, &setup.pair.p_plus, &points, fit_degree(ex.degree)) {
            Ok(m) => m
                .apply(&ex.expected_q_plus().coeff_vector())
                .iter()
                .all(RatFunc::is_zero),
            Err(_) => false,
        }
    };
    out.push(stage(
        "expected q+ in fitted family",
        q_ok,
        "satisfies all fitting conditions",
    ));
    let (plus, minus) = std::thread::scope(|s| {
        let m = s.spawn(|| setup.run_branch(Sign::Minus));
        (
            setup.run_branch(Sign::Plus),
            m.join().expect("branch thread panicked"),
        )
    });
    let expected_point = ex.expected_point();
    let plus = match plus {
        Ok(b) => {
            let degs: Vec<usize> = b
                .point
                .coords()
                .iter()
                .map(|c| c.degree().unwrap_or(0))
                .collect();
            out.push(stage(
                "ninth point Q+",
                b.point.proj_eq(&expected_point),
                format!("projectively; coordinate degrees {degs:?} in u"),
            ));
            b
        }
        Err(e) => {
            fail_rest(&mut out, &LATER[3..], e.name());
            out.push(stage("height", false, "not reached"));
            return out;
        }
    };
    let minus = match minus {
        Ok(b) => {
            let ok = b.point.proj_eq(&expected_point.negate_var());
            out.push(stage("ninth point Q-", ok, "u -> -u of Q+"));
            b
        }
        Err(e) => {
            fail_rest(&mut out, &LATER[4..], e.name());
            out.push(stage("height", false, "not reached"));
            return out;
        }
    };
    match assemble_section(&plus.image, &minus.image, &setup.data, Some(ex.degree)) {
        Ok(sec) => {
            let x = sec.x().cloned();
            let y = sec.y().cloned();
            out.push(stage(
                "section X",
                x.as_ref() == Some(&ex.expected_x()),
                x.map(|v| shape(&v)).unwrap_or_default(),
            ));
            out.push(stage(
                "section Y",
                y.as_ref() == Some(&ex.expected_y()),
                y.map(|v| shape(&v)).unwrap_or_default(),
            ));
            let h = Rational::from_integer(ex.height.into());
            out.push(stage("height", sec.height == h, sec.height.to_string()));
        }
        Err(e) => {
            fail_rest(&mut out, &LATER[5..], e.name());
            out.push(stage("height", false, "not reached"));
        }
    }
    out
}

fn degree_five() -> WorkedExample {
    WorkedExample {
        name: "d5",
        e1: [-4, 0, 16],
        e2: [-4, -160, -1264],
        x_num: "x1^5-8*x1^4+48*x1^3-512*x1+1024",
        x_den: "x1^2*(x1-4)^2",
        y_num: "(x1^3+4*x1^2+16*x1-64)*(x1^3-16*x1^2+64*x1-128)",
        y_den: "x1^3*(x1-4)^3",
        degree: 5,
        coefficients: ["7936", "-389275648/27", "-45056", "-659664896"],
        p_plus: &[
            "8192",
            "-6144",
            "1536",
            "-64*(3-u^3)",
            "16*(1-3*u^3)",
            "-12*(1-u^3)",
            "1-u^3",
        ],
        q_plus: Q5_TERMS,
        point: [
            Q5_X1.to_string(),
            format!("-u^2*({Q5_X2_CORE})"),
            format!("u^4*(u^3-11)*({Q5_Z_CORE})"),
        ],
        f: F5,
        g: G5,
        h: "s*(s+121)*(5*s^2+1958*s+73205)",
        y_factor: "s-121",
        height: 10,
    }
}

fn degree_six() -> WorkedExample {
    WorkedExample {
        name: "d6",
        e1: [1, -1, 0],
        e2: [1, -36, -140],
        x_num: "x1^6+5*x1^4+16*x1^3-5*x1^2-1",
        x_den: "x1*(x1+1)^2*(x1-1)^2",
        y_num: "(x1^2+1)*(x1^2-4*x1-1)*(x1^4+4*x1^3+6*x1^2-4*x1+1)",
        y_den: "x1^2*(x1+1)^3*(x1-1)^3",
        degree: 6,
        coefficients: ["436", "-1215808/27", "80", "-4000000"],
        p_plus: &[
            "-1",
            "0",
            "10+u^3",
            "-32",
            "-3*u^3",
            "-32",
            "-(10-3*u^3)",
            "0",
            "1-u^3",
        ],
        q_plus: Q6_TERMS,
        point: [
            Q6_X1.to_string(),
            Q6_X2.to_string(),
            format!("({Q6_Z_A})*({Q6_Z_B})"),
        ],
        f: F6,
        g: G6,
        h: "s*(37*s^4-51760*s^3+8556000*s^2+2588000000*s+92500000000)",
        y_factor: "-(s^2+50000)",
        height: 12,
    }
}

const Q6_X1: &str = "4*(11*u^6-380*u^3+500)*(u^12+4600*u^6+250000)";

const Q5_X1: &str = concat!(
    "-u^27+15*u^26-111*u^25+513*u^24-1540*u^23+2376*u^22+3088*u^21",
    "-30688*u^20+86220*u^19-59104*u^18-525548*u^17+2708376*u^16",
    "-7467922*u^15+13121086*u^14-11661738*u^13-9637166*u^12+50518468*u^11",
    "-66858792*u^10-29250056*u^9+251665480*u^8-303420084*u^7-550150216*u^6",
    "+3061901612*u^5-7015381560*u^4+10464610827*u^3-10737431221*u^2",
    "+7073843073*u-2357947691",
);

const Q5_X2_CORE: &str = concat!(
    "u^27-15*u^26+115*u^25-573*u^24+1980*u^23-4448*u^22+3668*u^21",
    "+16836*u^20-83240*u^19+177220*u^18-107980*u^17-458896*u^16",
    "+1042758*u^15+2513478*u^14-21451210*u^13+70822202*u^12-148448124*u^11",
    "+202614016*u^10-137728492*u^9-58548028*u^8+73258240*u^7+845573652*u^6",
    "-3426521076*u^5+7372270576*u^4-10698456879*u^3+10815379905*u^2",
    "-7073843073*u+2357947691",
);

const Q5_Z_CORE: &str = concat!(
    "3*u^18-45*u^17+345*u^16-1746*u^15+6373*u^14-16869*u^13+29401*u^12",
    "-15718*u^11-91574*u^10+351032*u^9-606122*u^8+140822*u^7+2433673*u^6",
    "-8354445*u^5+16882525*u^4-23981958*u^3+24201573*u^2-15944049*u+5314683",
);

const F5: &str = concat!(
    "3*s^10+4242*s^9+2430679*s^8+730135384*s^7+129150804662*s^6",
    "+16365054527404*s^5+1890896931056342*s^4+156511003892745304*s^3",
    "+7628511948299823559*s^2+194918754081273106962*s",
    "+2018249984797680027603",
);

const G5: &str = concat!(
    "s^14+2242*s^13+2236395*s^12+1318219892*s^11+514922124233*s^10",
    "+141266126525854*s^9+27916724974734827*s^8+3983998405505436120*s^7",
    "+408728770355092602107*s^6+30281648805286481009374*s^5",
    "+1616046206494303287179993*s^4+60571847938187268807626612*s^3",
    "+1504534724917202541777070395*s^2+22083100659160664074343947522*s",
    "+144209936106499234037676064081",
);

const Q6_X2: &str = concat!(
    "-4*u^24+44*u^21+8024*u^18-147440*u^15-543200*u^12+3688000*u^9",
    "-199600000*u^6+140000000*u^3-7000000000",
);

const F6: &str = concat!(
    "3*s^12-11568*s^11+16300384*s^10-9677907200*s^9+2291334841600*s^8",
    "-1084577868800000*s^7+702031826176000000*s^6+54228893440000000000*s^5",
    "+5728337104000000000000*s^4+1209738400000000000000000*s^3",
    "+101877400000000000000000000*s^2+3615000000000000000000000000*s",
    "+46875000000000000000000000000",
);

const G6: &str = concat!(
    "s^16-5784*s^15+13675968*s^14-16679958400*s^13+10338144240640*s^12",
    "-1473647335372800*s^11-2426837586892800000*s^10",
    "+1660357937152102400000*s^9-221006891984578560000000*s^8",
    "-83017896857605120000000000*s^7-6067093967232000000000000000*s^6",
    "+184205916921600000000000000000*s^5",
    "+64613401504000000000000000000000*s^4",
    "+5212487000000000000000000000000000*s^3",
    "+213687000000000000000000000000000000*s^2",
    "+4518750000000000000000000000000000000*s",
    "+39062500000000000000000000000000000000",
);

const Q6_Z_A: &str = "u^8+6*u^7+18*u^6+20*u^5-40*u^4-160*u^3-500*u^2-1000*u-1000";

const Q6_Z_B: &str = concat!(
    "u^16-6*u^15+18*u^14-68*u^13+244*u^12-680*u^11+1080*u^10-960*u^9",
    "+2800*u^8-2400*u^7-10400*u^6+20000*u^5+50000*u^4-180000*u^3+500000*u^2",
    "-1000000*u+1000000",
);

const Q5_TERMS: &[([u32; 3], &str)] = &[
        ([3, 0, 0], "u^2*(3*u^10-15*u^9+20*u^8+67*u^7-371*u^6+1024*u^5-1727*u^4+1771*u^3-2068*u^2+3993*u-3993)"),
        ([2, 1, 0], "-(3*u^10-27*u^9+100*u^8-193*u^7+101*u^6+596*u^5-2299*u^4+3839*u^3-4136*u^2+3993*u-3993)"),
        ([2, 0, 1], "-4*(4*u^12-20*u^11+31*u^10+53*u^9-372*u^8+1143*u^7-1843*u^6+1508*u^5-1419*u^4+3135*u^3-3036*u^2-1331*u+1331)"),
        ([1, 2, 0], "-4*(3*u^7-20*u^6+65*u^5-118*u^4+107*u^3+143*u^2-517*u+517)"),
        ([1, 1, 1], "4*(3*u^10-25*u^9+90*u^8-161*u^7+33*u^6+728*u^5-2567*u^4+3997*u^3-3586*u^2+3069*u-3069)"),
        ([1, 0, 2], "16*(u^12-5*u^11+8*u^10-3*u^9-21*u^8+176*u^7-493*u^6+1089*u^5-3068*u^4+5411*u^3-5159*u^2+1804*u-1804)"),
        ([0, 2, 1], "8*(3*u^7-17*u^6+50*u^5-72*u^4-2*u^3+374*u^2-891*u+891)"),
        ([0, 1, 2], "32*(u^9-5*u^8+11*u^7-9*u^6-26*u^5+196*u^4-327*u^3+231*u^2-55*u+55)"),
        ([0, 0, 3], "-64*(3*u^10-21*u^9+70*u^8-111*u^7+47*u^6+304*u^5-639*u^4-367*u^3+4554*u^2-9405*u+9405)"),
    ];

const Q6_TERMS: &[([u32; 3], &str)] = &[
    ([3, 0, 0], "(u^9+2*u^6-340*u^3+1000)"),
    ([2, 1, 0], "5*(u^6-12*u^3-100)"),
    ([2, 0, 1], "40*u^3*(u^3-5)"),
    ([1, 2, 0], "12*(u^3-10)"),
    ([1, 1, 1], "4*(19*u^3+10)"),
    ([1, 0, 2], "-(u^9-10*u^6-340*u^3-2600)"),
    ([0, 2, 1], "4*(u^3+10)"),
    ([0, 1, 2], "-(u^6-32*u^3+180)"),
    ([0, 0, 3], "-4*(u^6+10*u^3+300)"),
];
