use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{bareiss, gauss, Matrix};
use crate::geometry::{evaluation_matrix, EmbeddedPoint};
use crate::separators::Bidegree;
use crate::{Error, Result};

/// Default modulus for the prime-field backend.
pub const DEFAULT_PRIME: u64 = 1_000_003;
/// Moduli must be strictly larger than this.
pub const MIN_PRIME: u64 = 1_000_000;

/// A field of scalars together with the elimination routines used on it.
///
/// Elements are plain values; the field object carries whatever context the
/// arithmetic needs (the modulus for 𝔽ₚ, nothing for ℚ).
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    /// Stable name used in output records, e.g. `rational` or `fp:1000003`.
    fn label(&self) -> String;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse.
    ///
    /// # Panics
    ///
    /// If `a` is zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    fn from_i64(&self, v: i64) -> Self::Elem;

    /// Image of a rational number, or `None` when its denominator is not
    /// invertible in the field.
    fn from_rational(&self, q: &BigRational) -> Option<Self::Elem>;

    /// Decimal rendering (`-3/4` for rationals, the residue for 𝔽ₚ).
    fn render(&self, a: &Self::Elem) -> String;

    fn rank(&self, m: &Matrix<Self::Elem>) -> usize {
        gauss::rank(self, m)
    }

    /// For each row, whether it is linearly independent of the remaining rows.
    fn independent_rows(&self, m: &Matrix<Self::Elem>) -> Vec<bool> {
        gauss::independent_rows(self, m)
    }

    /// [`Field::independent_rows`] of the evaluation matrix of `points` in
    /// bidegree `d`. Implementations may avoid materialising that matrix.
    fn separated_points(&self, points: &[EmbeddedPoint<Self::Elem>], d: Bidegree) -> Vec<bool> {
        self.independent_rows(&evaluation_matrix(self, points, d))
    }

    /// Canonical nullspace basis, see [`gauss::nullspace`].
    fn nullspace(&self, m: &Matrix<Self::Elem>) -> Vec<Vec<Self::Elem>> {
        gauss::nullspace(self, m)
    }
}

/// The rational numbers, with arbitrary-precision entries.
///
/// Rank and row-dependency computations go through fraction-free integer
/// elimination after clearing denominators row by row.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn label(&self) -> String {
        "rational".to_owned()
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_rational(&self, q: &BigRational) -> Option<BigRational> {
        Some(q.clone())
    }

    fn render(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn rank(&self, m: &Matrix<BigRational>) -> usize {
        bareiss::rank(&integer_rows(m))
    }

    fn independent_rows(&self, m: &Matrix<BigRational>) -> Vec<bool> {
        bareiss::independent_rows(&integer_rows(m))
    }

    fn separated_points(&self, points: &[EmbeddedPoint<BigRational>], d: Bidegree) -> Vec<bool> {
        small_evaluation_rows(points, d)
            .and_then(bareiss::independent_rows_small)
            .unwrap_or_else(|| self.independent_rows(&evaluation_matrix(self, points, d)))
    }
}

/// Evaluation rows computed on integer representatives `[x0:x1]` of each
/// factor, in `i128`. Each row is a nonzero multiple of the canonical row.
/// `None` on overflow.
fn small_evaluation_rows(points: &[EmbeddedPoint<BigRational>], d: Bidegree) -> Option<Vec<Vec<i128>>> {
    fn integral(h: &[BigRational; 2]) -> Option<[i128; 2]> {
        let lcm = h[0].denom().lcm(h[1].denom());
        let scale = |q: &BigRational| (q.numer() * (&lcm / q.denom())).to_i128();
        Some([scale(&h[0])?, scale(&h[1])?])
    }
    // v0^(n-k) * v1^k for k = 0..=n
    fn products(v: [i128; 2], n: usize) -> Option<Vec<i128>> {
        let mut p0 = vec![1i128; n + 1];
        let mut p1 = vec![1i128; n + 1];
        for k in 1..=n {
            p0[k] = p0[k - 1].checked_mul(v[0])?;
            p1[k] = p1[k - 1].checked_mul(v[1])?;
        }
        (0..=n).map(|k| p0[n - k].checked_mul(p1[k])).collect()
    }
    points
        .iter()
        .map(|p| {
            let xs = products(integral(&p.x)?, d.i)?;
            let ys = products(integral(&p.y)?, d.j)?;
            let mut row = Vec::with_capacity(d.dim());
            for x in &xs {
                for y in &ys {
                    row.push(x.checked_mul(*y)?);
                }
            }
            Some(row)
        })
        .collect()
}

/// Each row scaled by the lcm of its denominators. Row scaling by a nonzero
/// constant changes neither rank nor row dependencies.
fn integer_rows(m: &Matrix<BigRational>) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|r| {
            let row = m.row(r);
            let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
        })
        .collect()
}

/// Residues modulo a prime `p` with `10⁶ < p < 2⁶³`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p <= MIN_PRIME || p >= 1 << 63 || !is_prime_u64(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_big(&self, v: &BigInt) -> u64 {
        let r = v.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits in u64")
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mulmod(acc, base, self.p);
            }
            base = mulmod(base, base, self.p);
            exp >>= 1;
        }
        acc
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        Self { p: DEFAULT_PRIME }
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl Field for PrimeField {
    type Elem = u64;

    fn label(&self) -> String {
        format!("fp:{}", self.p)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mulmod(*a, *b, self.p)
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        self.pow(*a, self.p - 2)
    }

    fn from_i64(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.p as i128) as u64
    }

    fn from_rational(&self, q: &BigRational) -> Option<u64> {
        let den = self.reduce_big(q.denom());
        if den == 0 {
            return None;
        }
        Some(self.mul(&self.reduce_big(q.numer()), &self.inv(&den)))
    }

    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let powmod = |mut base: u64, mut exp: u64| {
        let mut acc = 1u64;
        base %= n;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mulmod(acc, base, n);
            }
            base = mulmod(base, base, n);
            exp >>= 1;
        }
        acc
    };
    'witness: for &a in &BASES {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
