//! Exact right-kernels of matrices over `Q(u)`.

use crate::algebra::ratfunc::{make_primitive, primitive_vector};
use crate::algebra::{RatFunc, Rational, Var, ZPoly};
use crate::error::{Error, Result};

/// Dense matrix over a rational function field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FFMatrix {
    rows: usize,
    cols: usize,
    var: Var,
    entries: Vec<Vec<RatFunc>>,
}

impl FFMatrix {
    pub fn new(cols: usize, var: Var, entries: Vec<Vec<RatFunc>>) -> Result<Self> {
        for row in &entries {
            if row.len() != cols {
                return Err(Error::Parse(format!(
                    "ragged matrix row: {} entries, expected {cols}",
                    row.len()
                )));
            }
            if let Some(bad) = row.iter().find(|e| e.var() != var) {
                return Err(Error::VarMismatch(var, bad.var()));
            }
        }
        Ok(FFMatrix {
            rows: entries.len(),
            cols,
            var,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn entries(&self) -> &[Vec<RatFunc>] {
        &self.entries
    }

    pub fn push_row(&mut self, row: Vec<RatFunc>) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::Parse("row length mismatch".into()));
        }
        self.entries.push(row);
        self.rows += 1;
        Ok(())
    }

    /// `M * v`.
    pub fn apply(&self, v: &[RatFunc]) -> Vec<RatFunc> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(RatFunc::zero(self.var), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    /// Reduced row-echelon data: the eliminated integer rows and the
    /// `(row, col)` pivot positions.
    fn eliminate(&self) -> (Vec<Vec<ZPoly>>, Vec<(usize, usize)>) {
        let mut m: Vec<Vec<ZPoly>> = self
            .entries
            .iter()
            .filter_map(|row| primitive_vector(row))
            .collect();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            if next == m.len() {
                break;
            }
            // smallest-degree nonzero entry; ties go to the earliest row
            let Some(best) = (next..m.len())
                .filter(|&r| !m[r][col].is_zero())
                .min_by_key(|&r| (m[r][col].deg(), r))
            else {
                continue;
            };
            m.swap(next, best);
            let piv = m[next][col].clone();
            for r in 0..m.len() {
                if r == next || m[r][col].is_zero() {
                    continue;
                }
                let g = piv.gcd(&m[r][col]);
                let a = piv.div_exact(&g).expect("gcd divides");
                let b = m[r][col].div_exact(&g).expect("gcd divides");
                let new_row: Vec<ZPoly> = (0..self.cols)
                    .map(|k| &(&m[r][k] * &a) - &(&m[next][k] * &b))
                    .collect();
                m[r] = new_row;
                make_primitive(&mut m[r]);
            }
            pivots.push((next, col));
            next += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.eliminate().1.len()
    }

    /// Basis of the right kernel. Each vector has coprime integer-polynomial
    /// entries with content 1 and a positive leading coefficient on its first
    /// nonzero entry. One vector per non-pivot column, in column order.
    pub fn nullspace(&self) -> Vec<Vec<RatFunc>> {
        let (m, pivots) = self.eliminate();
        let var = self.var;
        let is_pivot: Vec<bool> = (0..self.cols)
            .map(|c| pivots.iter().any(|&(_, pc)| pc == c))
            .collect();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![RatFunc::zero(var); self.cols];
            v[free] = RatFunc::one(var);
            for &(r, c) in &pivots {
                if m[r][free].is_zero() {
                    continue;
                }
                v[c] = RatFunc::from_zpolys(
                    var,
                    -Rational::from_integer(1.into()),
                    m[r][free].clone(),
                    m[r][c].clone(),
                );
            }
            let ints = primitive_vector(&v).expect("free column entry is 1");
            basis.push(
                ints.into_iter()
                    .map(|p| {
                        RatFunc::from_zpolys(var, Rational::from_integer(1.into()), p, ZPoly::one())
                    })
                    .collect(),
            );
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(k: i64) -> RatFunc {
        RatFunc::from_int(Var::U, k)
    }

    #[test]
    fn one_by_two() {
        let m = FFMatrix::new(2, Var::U, vec![vec![c(1), c(-1)]]).unwrap();
        assert_eq!(m.nullspace(), vec![vec![c(1), c(1)]]);
    }

    #[test]
    fn kernel_over_function_field() {
        let u = RatFunc::x(Var::U);
        // rows (u, 1, 0) and (0, u, 1): kernel spanned by (1, -u, u^2)
        let m = FFMatrix::new(
            3,
            Var::U,
            vec![vec![u.clone(), c(1), c(0)], vec![c(0), u.clone(), c(1)]],
        )
        .unwrap();
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(m.apply(&ns[0]).iter().all(RatFunc::is_zero));
        assert_eq!(ns[0], vec![c(1), -&u, &u * &u]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let m = FFMatrix::new(2, Var::U, vec![vec![c(1), c(2)], vec![c(3), c(4)]]).unwrap();
        assert!(m.nullspace().is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let m = FFMatrix::new(3, Var::U, vec![vec![c(0), c(0), c(0)]]).unwrap();
        assert_eq!(m.nullspace().len(), 3);
    }
}
