//! Gaussian elimination over `Q(h,g)`.

use std::collections::BTreeSet;

use super::poly::{NcPoly, Word};
use crate::scalars::{PolyHG, RatFun};
use crate::Error;

/// Reduced row echelon form; `pivots[r]` is the pivot column of row `r`.
#[derive(Clone, Debug)]
pub struct Rref {
    pub rows: Vec<Vec<RatFun>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Rref {
    pub fn new(mut m: Vec<Vec<RatFun>>, ncols: usize) -> Self {
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..ncols {
            let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][col].inv().expect("nonzero pivot");
            for x in m[r].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i == r || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x = &*x - &(&f * p);
                    }
                }
            }
            pivots.push(col);
            r += 1;
            if r == m.len() {
                break;
            }
        }
        m.truncate(r);
        Self {
            rows: m,
            pivots,
            ncols,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `v` against the pivots; zero iff `v` is in the row span.
    pub fn reduce(&self, v: &[RatFun]) -> Vec<RatFun> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&f * r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[RatFun]) -> bool {
        self.reduce(v).iter().all(RatFun::is_zero)
    }
}

/// Unique solution of `A x = b`, with `A` given row by row.
pub fn solve_unique(a: &[Vec<RatFun>], b: &[RatFun], nvars: usize) -> Result<Vec<RatFun>, Error> {
    let aug: Vec<Vec<RatFun>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let rref = Rref::new(aug, nvars + 1);
    if rref.pivots.contains(&nvars) {
        return Err(Error::NoSolution("linear system is inconsistent".into()));
    }
    if rref.rank() < nvars {
        return Err(Error::NoSolution(format!(
            "solution not unique: rank {} of {nvars}",
            rref.rank()
        )));
    }
    Ok(rref.rows.iter().map(|r| r[nvars].clone()).collect())
}

/// One linear equation `Σ x_v·p_v = target` between noncommutative polynomials.
#[derive(Clone, Debug, Default)]
pub struct NcEquation {
    pub terms: Vec<(usize, NcPoly)>,
    pub target: NcPoly,
}

/// Unique polynomial solution of a system of [`NcEquation`]s, compared
/// word by word.
pub fn solve_nc(nvars: usize, eqs: &[NcEquation]) -> Result<Vec<PolyHG>, Error> {
    let mut a = Vec::new();
    let mut b = Vec::new();
    for eq in eqs {
        let words: BTreeSet<&Word> = eq
            .terms
            .iter()
            .flat_map(|(_, p)| p.terms().map(|(w, _)| w))
            .chain(eq.target.terms().map(|(w, _)| w))
            .collect();
        for w in words {
            let mut row = vec![RatFun::zero(); nvars];
            for (v, p) in &eq.terms {
                row[*v] = &row[*v] + &RatFun::from_poly(p.coeff(w));
            }
            a.push(row);
            b.push(RatFun::from_poly(eq.target.coeff(w)));
        }
    }
    solve_unique(&a, &b, nvars)?
        .into_iter()
        .map(|x| {
            x.as_poly()
                .cloned()
                .ok_or_else(|| Error::NoSolution(format!("non-polynomial coefficient {x}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::PolyHG;

    fn rf(p: PolyHG) -> RatFun {
        RatFun::from_poly(p)
    }

    #[test]
    fn solves_over_rational_functions() {
        // h x + y = 1, x - g y = 0
        let a = vec![
            vec![rf(PolyHG::h()), RatFun::one()],
            vec![RatFun::one(), rf(-PolyHG::g())],
        ];
        let b = vec![RatFun::one(), RatFun::zero()];
        let x = solve_unique(&a, &b, 2).unwrap();
        let check0 = &(&rf(PolyHG::h()) * &x[0]) + &x[1];
        assert_eq!(check0, RatFun::one());
        assert_eq!(&x[0] - &(&rf(PolyHG::g()) * &x[1]), RatFun::zero());
        let sing = vec![
            vec![RatFun::one(), RatFun::one()],
            vec![RatFun::one(), RatFun::one()],
        ];
        assert!(solve_unique(&sing, &b, 2).is_err());
    }

    #[test]
    fn span_membership() {
        let r = Rref::new(vec![vec![RatFun::one(), rf(PolyHG::h())]], 2);
        assert!(r.contains(&[rf(PolyHG::g()), rf(&PolyHG::g() * &PolyHG::h())]));
        assert!(!r.contains(&[RatFun::one(), RatFun::zero()]));
    }
}
