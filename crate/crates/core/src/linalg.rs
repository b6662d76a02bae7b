//! Exact ranks and cochain-complex cohomology over `Q` and `F_p`.
//!
//! Characteristic zero uses fraction-free (Bareiss) elimination, first in
//! checked `i128` and on overflow again in arbitrary precision. Prime
//! characteristic uses plain modular elimination.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest prime characteristic accepted.
pub const MAX_PRIME: u32 = 1 << 16;

/// The coefficient field: exact rationals (characteristic 0) or `F_p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct FieldSpec {
    characteristic: u32,
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec { characteristic: 0 };

    pub fn new(characteristic: u32) -> Result<Self> {
        if characteristic == 0 || (characteristic < MAX_PRIME && is_prime(characteristic)) {
            Ok(FieldSpec { characteristic })
        } else {
            Err(Error::UnsupportedField(characteristic))
        }
    }

    pub fn prime(p: u32) -> Result<Self> {
        if p == 0 {
            return Err(Error::UnsupportedField(0));
        }
        Self::new(p)
    }

    pub fn characteristic(self) -> u32 {
        self.characteristic
    }
}

impl TryFrom<u32> for FieldSpec {
    type Error = Error;
    fn try_from(c: u32) -> Result<Self> {
        FieldSpec::new(c)
    }
}

impl From<FieldSpec> for u32 {
    fn from(f: FieldSpec) -> u32 {
        f.characteristic
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "Q"),
            p => write!(f, "F_{p}"),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// A dense matrix with entries in `{-1, 0, 1}`.
#[derive(Clone, PartialEq, Eq)]
pub struct SignMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i8>,
}

impl SignMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SignMatrix { rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds from row vectors. Panics on ragged rows or non-sign entries.
    pub fn from_rows(rows: &[Vec<i8>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged sign matrix");
            for (j, &e) in row.iter().enumerate() {
                m.set(i, j, e);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i8) {
        assert!((-1..=1).contains(&value), "sign matrix entry {value}");
        self.entries[i * self.cols + j] = value;
    }

    pub fn transpose(&self) -> SignMatrix {
        let mut t = SignMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    /// Integer product `self * rhs`.
    pub fn product(&self, rhs: &SignMatrix) -> Vec<Vec<i64>> {
        assert_eq!(self.cols, rhs.rows);
        (0..self.rows)
            .map(|i| {
                (0..rhs.cols)
                    .map(|j| (0..self.cols).map(|k| i64::from(self.get(i, k)) * i64::from(rhs.get(k, j))).sum())
                    .collect()
            })
            .collect()
    }

    fn integer_rows<T: From<i8>>(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| T::from(self.get(i, j))).collect()).collect()
    }
}

impl fmt::Debug for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SignMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{:>2}", self.get(i, j))).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Rank of `mat` over the given field.
pub fn rank(mat: &SignMatrix, field: FieldSpec) -> usize {
    if mat.rows == 0 || mat.cols == 0 {
        return 0;
    }
    match field.characteristic {
        0 => rational_rank_certificate(mat).0,
        p => rank_mod_p(mat, p),
    }
}

/// Rank over `Q` together with the last Bareiss pivot, which is (up to sign)
/// a nonvanishing maximal minor. It is `1` for the zero matrix.
pub fn rational_rank_certificate(mat: &SignMatrix) -> (usize, BigInt) {
    if let Some((r, pivot)) = bareiss::<Checked>(mat.integer_rows::<i128>().into_iter().map(|r| r.into_iter().map(Checked).collect()).collect()) {
        return (r, BigInt::from(pivot.0));
    }
    bareiss::<BigInt>(mat.integer_rows::<i64>().into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect())
        .expect("arbitrary precision elimination cannot overflow")
}

/// Integer-like values that support the Bareiss update step.
trait BareissScalar: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// `(a*b - c*d) / e`, exact; `None` on overflow.
    fn update(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self>;
}

#[derive(Clone, Copy, Debug)]
struct Checked(i128);

impl BareissScalar for Checked {
    fn zero() -> Self {
        Checked(0)
    }
    fn one() -> Self {
        Checked(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn update(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        let num = a.0.checked_mul(b.0)?.checked_sub(c.0.checked_mul(d.0)?)?;
        debug_assert_eq!(num % e.0, 0);
        Some(Checked(num / e.0))
    }
}

impl BareissScalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn update(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        Some((a * b - c * d) / e)
    }
}

fn bareiss<T: BareissScalar>(mut a: Vec<Vec<T>>) -> Option<(usize, T)> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut k = 0;
    for col in 0..cols {
        if k == rows {
            break;
        }
        let Some(pivot_row) = (k..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(k, pivot_row);
        for i in k + 1..rows {
            if a[i][col].is_zero() {
                // entries still need the fraction-free rescaling
                for j in col + 1..cols {
                    a[i][j] = T::update(&a[k][col], &a[i][j], &T::zero(), &T::zero(), &prev)?;
                }
                continue;
            }
            for j in col + 1..cols {
                a[i][j] = T::update(&a[k][col], &a[i][j], &a[i][col], &a[k][j], &prev)?;
            }
            a[i][col] = T::zero();
        }
        prev = a[k][col].clone();
        k += 1;
    }
    Some((k, prev))
}

fn rank_mod_p(mat: &SignMatrix, p: u32) -> usize {
    let p = u64::from(p);
    let mut a: Vec<Vec<u64>> = (0..mat.rows)
        .map(|i| (0..mat.cols).map(|j| (i64::from(mat.get(i, j))).rem_euclid(p as i64) as u64).collect())
        .collect();
    let (rows, cols) = (mat.rows, mat.cols);
    let mut k = 0;
    for col in 0..cols {
        if k == rows {
            break;
        }
        let Some(pivot_row) = (k..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(k, pivot_row);
        let inv = mod_pow(a[k][col], p - 2, p);
        for x in &mut a[k][col..] {
            *x = *x * inv % p;
        }
        let (top, below) = a.split_at_mut(k + 1);
        let pivot = &top[k];
        for row in below {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            for (x, &y) in row[col..].iter_mut().zip(&pivot[col..]) {
                *x = (*x + p * p - factor * y) % p;
            }
        }
        k += 1;
    }
    k
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// A cochain complex `0 -> C^0 -> C^1 -> ... -> C^k -> 0` with sign
/// differentials. `maps[i]` is `d^i : C^i -> C^{i+1}`, stored with
/// `dims[i+1]` rows and `dims[i]` columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    dims: Vec<usize>,
    maps: Vec<SignMatrix>,
}

impl ChainComplex {
    /// Builds a complex from component dimensions and the differentials
    /// between consecutive components. Checks composability and `d∘d = 0`.
    pub fn new(dims: Vec<usize>, maps: Vec<SignMatrix>) -> Result<Self> {
        if dims.is_empty() || maps.len() + 1 != dims.len() {
            return Err(Error::Internal(format!("{} components need {} maps, got {}", dims.len(), dims.len().saturating_sub(1), maps.len())));
        }
        for (i, d) in maps.iter().enumerate() {
            if d.cols() != dims[i] || d.rows() != dims[i + 1] {
                return Err(Error::Internal(format!(
                    "d^{i} is {}x{}, expected {}x{}",
                    d.rows(),
                    d.cols(),
                    dims[i + 1],
                    dims[i]
                )));
            }
        }
        for (i, pair) in maps.windows(2).enumerate() {
            if pair[1].product(&pair[0]).iter().flatten().any(|&e| e != 0) {
                return Err(Error::Internal(format!("d^{} ∘ d^{i} is not zero", i + 1)));
            }
        }
        Ok(ChainComplex { dims, maps })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[SignMatrix] {
        &self.maps
    }

    /// `dim H^i = dim C^i - rank d^i - rank d^{i-1}` for every index.
    pub fn cohomology_dims(&self, field: FieldSpec) -> Result<Vec<usize>> {
        let ranks: Vec<usize> = self.maps.iter().map(|d| rank(d, field)).collect();
        let h: Vec<usize> = self
            .dims
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let out = ranks.get(i).copied().unwrap_or(0);
                let inc = if i == 0 { 0 } else { ranks[i - 1] };
                c.checked_sub(out + inc)
                    .ok_or_else(|| Error::Internal(format!("negative cohomology dimension at index {i}")))
            })
            .collect::<Result<_>>()?;
        let euler = |v: &[usize]| -> i64 {
            v.iter().enumerate().map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
        };
        if euler(&h) != euler(&self.dims) {
            return Err(Error::Internal("Euler characteristic mismatch".into()));
        }
        Ok(h)
    }
}

/// Cohomology dimensions of `cx` over `field`.
pub fn cohomology_dims(cx: &ChainComplex, field: FieldSpec) -> Result<Vec<usize>> {
    cx.cohomology_dims(field)
}

/// True when `value` is divisible by `p`. Used with rank certificates.
pub fn divisible_by(value: &BigInt, p: u32) -> bool {
    Zero::is_zero(&(value.abs() % BigInt::from(p)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::RATIONALS
    }

    fn f(p: u32) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn field_validation() {
        assert!(FieldSpec::new(0).is_ok());
        assert!(FieldSpec::new(2).is_ok());
        assert!(FieldSpec::new(65521).is_ok());
        assert_eq!(FieldSpec::new(4), Err(Error::UnsupportedField(4)));
        assert_eq!(FieldSpec::new(1), Err(Error::UnsupportedField(1)));
        assert!(FieldSpec::new(65537).is_err());
    }

    #[test]
    fn identity_rank_over_f2() {
        assert_eq!(rank(&SignMatrix::identity(2), f(2)), 2);
    }

    #[test]
    fn hollow_triangle_boundary_rank() {
        // edges 01, 02, 12 -> vertices 0, 1, 2
        let d = SignMatrix::from_rows(&[vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]);
        assert_eq!(rank(&d, q()), 2);
        assert_eq!(rank(&d, f(2)), 2);
    }

    #[test]
    fn characteristic_dependent_rank() {
        // the 2x2 matrix [[1,1],[1,-1]] has determinant -2
        let d = SignMatrix::from_rows(&[vec![1, 1], vec![1, -1]]);
        assert_eq!(rank(&d, q()), 2);
        assert_eq!(rank(&d, f(3)), 2);
        assert_eq!(rank(&d, f(2)), 1);
        let (r, minor) = rational_rank_certificate(&d);
        assert_eq!(r, 2);
        assert!(divisible_by(&minor, 2));
    }

    #[test]
    fn empty_matrices_have_rank_zero() {
        assert_eq!(rank(&SignMatrix::zeros(0, 4), q()), 0);
        assert_eq!(rank(&SignMatrix::zeros(3, 0), f(2)), 0);
        assert_eq!(rank(&SignMatrix::zeros(3, 3), q()), 0);
    }

    #[test]
    fn identity_complex_is_acyclic() {
        let cx = ChainComplex::new(vec![1, 1], vec![SignMatrix::identity(1)]).unwrap();
        assert_eq!(cx.cohomology_dims(q()).unwrap(), vec![0, 0]);
    }

    #[test]
    fn single_component_complex() {
        let cx = ChainComplex::new(vec![0, 1, 0], vec![SignMatrix::zeros(1, 0), SignMatrix::zeros(0, 1)]).unwrap();
        assert_eq!(cx.cohomology_dims(f(2)).unwrap(), vec![0, 1, 0]);
    }

    #[test]
    fn two_variable_cech_strand_with_both_exponents_negative() {
        // Only the component inverting both variables survives: 0 -> 0 -> 0 -> K.
        let cx = ChainComplex::new(
            vec![0, 0, 1],
            vec![SignMatrix::zeros(0, 0), SignMatrix::zeros(1, 0)],
        )
        .unwrap();
        assert_eq!(cx.cohomology_dims(q()).unwrap(), vec![0, 0, 1]);
        // With no negative exponent all four components are present and the
        // complex K -> K^2 -> K is exact.
        let d0 = SignMatrix::from_rows(&[vec![1], vec![1]]);
        let d1 = SignMatrix::from_rows(&[vec![-1, 1]]);
        let full = ChainComplex::new(vec![1, 2, 1], vec![d0, d1]).unwrap();
        assert_eq!(full.cohomology_dims(q()).unwrap(), vec![0, 0, 0]);
    }

    #[test]
    fn non_complex_is_rejected() {
        let d0 = SignMatrix::from_rows(&[vec![1]]);
        let d1 = SignMatrix::from_rows(&[vec![1]]);
        assert!(matches!(ChainComplex::new(vec![1, 1, 1], vec![d0, d1]), Err(Error::Internal(_))));
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        // A 40x40 matrix of +-1 entries with large minors stresses the i128 path.
        let n = 40;
        let rows: Vec<Vec<i8>> = (0..n)
            .map(|i| (0..n).map(|j| if (i * 7 + j * 13 + i * j) % 3 == 0 { -1 } else { 1 }).collect())
            .collect();
        let m = SignMatrix::from_rows(&rows);
        let (r, _) = rational_rank_certificate(&m);
        let big = bareiss::<BigInt>(m.integer_rows::<i64>().into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect()).unwrap();
        assert_eq!(r, big.0);
    }
}
