//! Dense matrices over `PolyHG` with graded Kronecker products.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::scalars::{rat, PolyHG, Rational};
use crate::Error;

/// Parity of each basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedSpace {
    pub parity: Vec<u8>,
}

impl GradedSpace {
    pub fn new(parity: Vec<u8>) -> Self {
        Self { parity }
    }

    /// `e0` even, `e1, e2` odd.
    pub fn fundamental() -> Self {
        Self::new(vec![0, 1, 1])
    }

    pub fn even(dim: usize) -> Self {
        Self::new(vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    /// Parities of the ordered basis `e_i ⊗ e_j`, index `i·dim + j`.
    pub fn tensor(&self, other: &GradedSpace) -> GradedSpace {
        let mut p = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.parity {
            for b in &other.parity {
                p.push((a + b) % 2);
            }
        }
        GradedSpace::new(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<PolyHG>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![PolyHG::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, PolyHG::one());
        }
        m
    }

    /// `E_ij` of size `n`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(n, n);
        m.set(i, j, PolyHG::one());
        m
    }

    pub fn diag(entries: &[Rational]) -> Self {
        let mut m = Self::zero(entries.len(), entries.len());
        for (i, c) in entries.iter().enumerate() {
            m.set(i, i, PolyHG::constant(c.clone()));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<PolyHG>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let data: Vec<PolyHG> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), r * c, "ragged rows");
        Self {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &PolyHG {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: PolyHG) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(PolyHG::is_zero)
    }

    /// Number of nonzero entries.
    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|p| !p.is_zero()).count()
    }

    pub fn to_rows(&self) -> Vec<Vec<PolyHG>> {
        self.data
            .chunks(self.cols)
            .map(<[PolyHG]>::to_vec)
            .collect()
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        self.add(&o.scale(&rat(-1, 1)))
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        self.map(|p| p.scale(c))
    }

    pub fn scale_poly(&self, c: &PolyHG) -> Matrix {
        self.map(|p| p * c)
    }

    pub fn truncate(&self, order: u32) -> Matrix {
        self.map(|p| p.truncate(order))
    }

    pub fn specialize(&self, h: Option<&Rational>, g: Option<&Rational>) -> Matrix {
        self.map(|p| p.specialize(h, g))
    }

    fn map(&self, f: impl Fn(&PolyHG) -> PolyHG) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows);
        let mut out = Matrix::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_all(fs: &[&Matrix]) -> Matrix {
        let mut it = fs.iter();
        let mut acc = (*it.next().expect("nonempty product")).clone();
        for f in it {
            acc = acc.mul(f);
        }
        acc
    }

    pub fn pow(&self, n: u32) -> Matrix {
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn commutator(&self, o: &Matrix) -> Matrix {
        self.mul(o).sub(&o.mul(self))
    }

    /// `AB - (-1)^{pq} BA`.
    pub fn supercommutator(&self, o: &Matrix, p: u8, q: u8) -> Matrix {
        let ba = o.mul(self);
        if p * q == 1 {
            self.mul(o).add(&ba)
        } else {
            self.mul(o).sub(&ba)
        }
    }

    /// `M^n = 0` for `n = rows`.
    pub fn is_nilpotent(&self) -> bool {
        self.rows == self.cols && self.pow(self.rows as u32).is_zero()
    }

    fn series_nilpotent(&self, coeff: impl Fn(u32) -> Rational) -> Result<Matrix, Error> {
        if !self.is_nilpotent() {
            return Err(Error::NotNilpotent);
        }
        let mut acc = Matrix::identity(self.rows).scale(&coeff(0));
        let mut power = Matrix::identity(self.rows);
        for k in 1..self.rows as u32 {
            power = power.mul(self);
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power.scale(&coeff(k)));
        }
        Ok(acc)
    }

    /// Exact `exp(M)` for nilpotent `M`.
    pub fn exp_nilpotent(&self) -> Result<Matrix, Error> {
        self.series_nilpotent(|k| {
            let mut f = Rational::one();
            for i in 1..=k {
                f *= rat(i as i64, 1);
            }
            f.recip()
        })
    }

    /// Exact `-ln(1 - M) = Σ M^k / k` for nilpotent `M`.
    pub fn neg_log_one_minus(&self) -> Result<Matrix, Error> {
        self.series_nilpotent(|k| {
            if k == 0 {
                Rational::zero()
            } else {
                rat(1, k as i64)
            }
        })
    }

    /// `(1 + N)^{-1} = Σ (-N)^k` for unipotent `1 + N`.
    pub fn inverse_unipotent(&self) -> Result<Matrix, Error> {
        let n = self.sub(&Matrix::identity(self.rows));
        n.scale(&rat(-1, 1))
            .series_nilpotent(|_| Rational::one())
            .map_err(|_| Error::NotInvertible("matrix is not unipotent".into()))
    }

    /// Graded Kronecker product `ρ(a⊗b)` on `V⊗W`:
    /// `(a⊗b)(e_i⊗e_j) = (-1)^{|b||i|} a e_i ⊗ b e_j`.
    pub fn graded_kron(a: &Matrix, b: &Matrix, b_parity: u8, va: &GradedSpace) -> Matrix {
        let (n, m) = (a.rows, b.rows);
        let mut out = Matrix::zero(n * m, a.cols * b.cols);
        for k in 0..n {
            for i in 0..a.cols {
                let x = a.get(k, i);
                if x.is_zero() {
                    continue;
                }
                let x = if b_parity * va.parity[i] == 1 {
                    x.scale(&rat(-1, 1))
                } else {
                    x.clone()
                };
                for l in 0..m {
                    for j in 0..b.cols {
                        let y = b.get(l, j);
                        if !y.is_zero() {
                            out.set(k * m + l, i * b.cols + j, &x * y);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
        Matrix::graded_kron(a, b, 0, &GradedSpace::even(a.cols))
    }

    /// Graded flip `P(e_i⊗e_j) = (-1)^{|i||j|} e_j⊗e_i` on `V⊗V`.
    pub fn graded_flip(v: &GradedSpace) -> Matrix {
        let n = v.dim();
        let mut p = Matrix::zero(n * n, n * n);
        for i in 0..n {
            for j in 0..n {
                let s = if v.parity[i] * v.parity[j] == 1 {
                    -1
                } else {
                    1
                };
                p.set(j * n + i, i * n + j, PolyHG::int(s));
            }
        }
        p
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut out = Matrix::zero(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|p| p.to_string()).collect();
        let w = cells.iter().map(String::len).max().unwrap_or(1);
        for r in cells.chunks(self.cols) {
            let line: Vec<String> = r.iter().map(|c| format!("{:>w$}", c, w = w)).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}
