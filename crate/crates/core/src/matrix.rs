//! Dense square matrices over `Q[x, alpha]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::MatrixError;
use crate::exact::{BiPoly, Rational};
use crate::par::Exec;

/// Square matrix stored row-major. Equality is entrywise canonical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    order: usize,
    entries: Vec<BiPoly>,
}

impl Mat {
    pub fn new(order: usize, entries: Vec<BiPoly>) -> Result<Self, MatrixError> {
        if order == 0 {
            return Err(MatrixError::EmptyMatrix);
        }
        if entries.len() != order * order {
            return Err(MatrixError::OrderMismatch(order * order, entries.len()));
        }
        Ok(Mat { order, entries })
    }

    pub fn from_rows(rows: Vec<Vec<BiPoly>>) -> Result<Self, MatrixError> {
        let order = rows.len();
        if order == 0 {
            return Err(MatrixError::EmptyMatrix);
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != order) {
            return Err(MatrixError::OrderMismatch(order, bad.len()));
        }
        Ok(Mat { order, entries: rows.into_iter().flatten().collect() })
    }

    /// Builds entry `(i, j)` from `f(i, j)`. Panics on order 0.
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> BiPoly) -> Self {
        assert!(order > 0, "matrix order must be at least 1");
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        Mat { order, entries }
    }

    /// Like [`Mat::from_fn`] but only evaluates `f` on and below the diagonal.
    pub fn lower_from_fn(order: usize, f: impl Fn(usize, usize) -> BiPoly) -> Self {
        Self::from_fn(order, |i, j| if i >= j { f(i, j) } else { BiPoly::zero() })
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| if i == j { BiPoly::one() } else { BiPoly::zero() })
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_, _| BiPoly::zero())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BiPoly {
        &self.entries[i * self.order + j]
    }

    pub fn entries(&self) -> &[BiPoly] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BiPoly] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BiPoly]> {
        self.entries.chunks(self.order)
    }

    /// True when every entry is a constant.
    pub fn is_rational(&self) -> bool {
        self.entries.iter().all(BiPoly::is_constant)
    }

    pub fn map(&self, f: impl Fn(&BiPoly) -> BiPoly) -> Mat {
        Mat { order: self.order, entries: self.entries.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Mat {
        self.map(|e| e.scale(c))
    }

    /// Leading principal `size x size` block.
    pub fn leading_block(&self, size: usize) -> Mat {
        assert!(size >= 1 && size <= self.order);
        Mat::from_fn(size, |i, j| self.get(i, j).clone())
    }

    /// First `(i, j)` in row-major order where the two matrices differ.
    pub fn first_difference(&self, other: &Mat) -> Option<(usize, usize)> {
        if self.order != other.order {
            return Some((0, 0));
        }
        let idx = self.entries.iter().zip(&other.entries).position(|(a, b)| a != b)?;
        Some((idx / self.order, idx % self.order))
    }

    /// Product, parallel over rows according to `exec`.
    pub fn mul_with(&self, other: &Mat, exec: Exec) -> Result<Mat, MatrixError> {
        if self.order != other.order {
            return Err(MatrixError::OrderMismatch(self.order, other.order));
        }
        let n = self.order;
        let rows = exec.map(n, |i| {
            let mut row = vec![BiPoly::zero(); n];
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for (j, slot) in row.iter_mut().enumerate() {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        *slot = &*slot + &(a * b);
                    }
                }
            }
            row
        });
        Ok(Mat { order: n, entries: rows.into_iter().flatten().collect() })
    }
}

/// Exact product with the default execution strategy.
pub fn mat_mul(a: &Mat, b: &Mat) -> Result<Mat, MatrixError> {
    a.mul_with(b, Exec::default())
}

pub fn mat_pow(a: &Mat, k: u32) -> Mat {
    let mut acc = Mat::identity(a.order);
    for _ in 0..k {
        acc = &acc * a;
    }
    acc
}

pub fn is_unit_lower_triangular(a: &Mat) -> bool {
    unit_lower_violation(a).is_none()
}

fn unit_lower_violation(a: &Mat) -> Option<(usize, usize)> {
    for i in 0..a.order {
        for j in i..a.order {
            let e = a.get(i, j);
            let ok = if i == j { e.is_one() } else { e.is_zero() };
            if !ok {
                return Some((i, j));
            }
        }
    }
    None
}

/// Inverse of a unit lower triangular matrix by forward substitution.
pub fn inverse_unit_lower(a: &Mat) -> Result<Mat, MatrixError> {
    if let Some((row, col)) = unit_lower_violation(a) {
        return Err(MatrixError::NotUnitLowerTriangular { row, col, entry: a.get(row, col).to_string() });
    }
    let n = a.order;
    let mut inv = Mat::identity(n);
    for i in 1..n {
        for j in 0..i {
            let mut acc = BiPoly::zero();
            for k in j..i {
                let l = a.get(i, k);
                if !l.is_zero() {
                    acc = &acc + &(l * inv.get(k, j));
                }
            }
            inv.entries[i * n + j] = -acc;
        }
    }
    Ok(inv)
}

pub fn transpose(a: &Mat) -> Mat {
    Mat::from_fn(a.order, |i, j| a.get(j, i).clone())
}

/// Entrywise derivative in `x`.
pub fn d_dx(a: &Mat) -> Mat {
    a.map(BiPoly::derivative_x)
}

/// Entrywise substitution of rational values for `x` and/or `alpha`.
pub fn substitute(a: &Mat, x: Option<&Rational>, alpha: Option<&Rational>) -> Mat {
    a.map(|e| e.eval(x, alpha))
}

/// Entrywise polynomial substitution `x -> x_to`, `alpha -> alpha_to`.
pub fn compose(a: &Mat, x_to: &BiPoly, alpha_to: &BiPoly) -> Mat {
    a.map(|e| e.compose(x_to, alpha_to))
}

/// Block diagonal `a (+) b`.
pub fn direct_sum(a: &Mat, b: &Mat) -> Mat {
    let (p, q) = (a.order, b.order);
    Mat::from_fn(p + q, |i, j| match (i < p, j < p) {
        (true, true) => a.get(i, j).clone(),
        (false, false) => b.get(i - p, j - p).clone(),
        _ => BiPoly::zero(),
    })
}

impl Mul<&Mat> for &Mat {
    type Output = Mat;
    /// Panics on an order mismatch; use [`mat_mul`] for a checked product.
    fn mul(self, rhs: &Mat) -> Mat {
        mat_mul(self, rhs).expect("matrix order mismatch")
    }
}

impl Mul for Mat {
    type Output = Mat;
    fn mul(self, rhs: Mat) -> Mat {
        &self * &rhs
    }
}

impl Add<&Mat> for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        assert_eq!(self.order, rhs.order, "matrix order mismatch");
        Mat { order: self.order, entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect() }
    }
}

impl Add for Mat {
    type Output = Mat;
    fn add(self, rhs: Mat) -> Mat {
        &self + &rhs
    }
}

impl Sub<&Mat> for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        assert_eq!(self.order, rhs.order, "matrix order mismatch");
        Mat { order: self.order, entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect() }
    }
}

impl Sub for Mat {
    type Output = Mat;
    fn sub(self, rhs: Mat) -> Mat {
        &self - &rhs
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        self.map(|e| -e)
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat({}x{})", self.order, self.order)?;
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
