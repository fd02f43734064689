//! Lattice-point counts of l1 balls, their two leading asymptotic terms and a
//! brute-force enumeration oracle.
//!
//! The even ball `B^e_k(p)` holds the points of `Z^k` within distance `p` of
//! the origin; its size is the Delannoy number `sum 2^i C(k,i) C(p,i)`. The
//! odd ball `B^o_k(p)` is centered midway between two adjacent lattice points
//! and has diameter `2p+1`; in doubled coordinates its points are those of
//! `(2Z+1) x (2Z)^(k-1)` with doubled norm at most `2p+1`.

use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::{LatticeParity, Point};

pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

pub const BALL_CSV_HEADER: &str = "parity,k,p,count,two_term_value,residual_norm";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BallSpec {
    pub parity: LatticeParity,
    pub k: usize,
    pub p: u32,
}

impl BallSpec {
    pub fn new(parity: LatticeParity, k: usize, p: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("dimension k must be >= 1".into()));
        }
        Ok(BallSpec { parity, k, p })
    }

    pub fn even(k: usize, p: u32) -> Result<Self> {
        Self::new(LatticeParity::Even, k, p)
    }

    pub fn odd(k: usize, p: u32) -> Result<Self> {
        Self::new(LatticeParity::Odd, k, p)
    }
}

/// Coefficients of `p^k` and `p^(k-1)` in the ball size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymptoticTerms {
    pub leading: BigRational,
    pub second: BigRational,
}

pub fn binomial(n: u64, r: u64) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn ball_count(spec: BallSpec) -> BigUint {
    let k = spec.k as u64;
    let p = u64::from(spec.p);
    (0..=k)
        .map(|i| {
            let shape = match spec.parity {
                LatticeParity::Even => binomial(k, i),
                LatticeParity::Odd => binomial(k, i) + binomial(k - 1, i),
            };
            (BigUint::one() << i) * shape * binomial(p, i)
        })
        .sum()
}

/// Every point of the ball, sorted, refusing to materialise more than
/// [`DEFAULT_ENUMERATION_CAP`] points.
pub fn ball_enumerate(spec: BallSpec) -> Result<Vec<Point>> {
    ball_enumerate_capped(spec, DEFAULT_ENUMERATION_CAP)
}

pub fn ball_enumerate_capped(spec: BallSpec, cap: u64) -> Result<Vec<Point>> {
    let expected = ball_count(spec);
    if expected > BigUint::from(cap) {
        return Err(Error::EnumerationCap { cap });
    }
    let budget = match spec.parity {
        LatticeParity::Even => 2 * i64::from(spec.p),
        LatticeParity::Odd => 2 * i64::from(spec.p) + 1,
    };
    let mut out = Vec::new();
    let mut coords = vec![0i32; spec.k];
    fill(spec.parity, &mut coords, 0, budget, &mut out);
    out.sort();
    Ok(out)
}

fn fill(parity: LatticeParity, coords: &mut [i32], axis: usize, budget: i64, out: &mut Vec<Point>) {
    if axis == coords.len() {
        out.push(Point::new(coords.to_vec()));
        return;
    }
    let odd = parity == LatticeParity::Odd && axis == 0;
    let mut c: i64 = -budget;
    while c <= budget {
        if (c.rem_euclid(2) == 1) == odd {
            coords[axis] = c as i32;
            fill(parity, coords, axis + 1, budget - c.abs(), out);
        }
        c += 1;
    }
}

pub fn leading_terms(parity: LatticeParity, k: usize) -> Result<AsymptoticTerms> {
    if k == 0 {
        return Err(Error::InvalidParameter("dimension k must be >= 1".into()));
    }
    let pow2 = |e: usize| BigInt::one() << e;
    let fact = |n: usize| (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
    let leading = BigRational::new(pow2(k), fact(k));
    let second_num = match parity {
        LatticeParity::Even => pow2(k - 1),
        LatticeParity::Odd => pow2(k),
    };
    Ok(AsymptoticTerms {
        leading,
        second: BigRational::new(second_num, fact(k - 1)),
    })
}

/// `c_k p^k + c_(k-1) p^(k-1)`.
pub fn two_term_value(parity: LatticeParity, k: usize, p: u32) -> Result<BigRational> {
    let t = leading_terms(parity, k)?;
    let pr = BigRational::from_integer(BigInt::from(p));
    Ok(t.leading * pow(&pr, k) + t.second * pow(&pr, k - 1))
}

/// `(size - two_term_value) / p^(k-2)`, or `None` when that power is `0^negative`
/// or `0^positive` (p = 0 with k != 2).
pub fn residual_norm(
    size: &BigUint,
    parity: LatticeParity,
    k: usize,
    p: u32,
) -> Result<Option<BigRational>> {
    let diff =
        BigRational::from_integer(BigInt::from(size.clone())) - two_term_value(parity, k, p)?;
    if k == 2 {
        return Ok(Some(diff));
    }
    if p == 0 {
        return Ok(None);
    }
    let pr = BigRational::from_integer(BigInt::from(p));
    Ok(Some(if k > 2 {
        diff / pow(&pr, k - 2)
    } else {
        diff * pr
    }))
}

fn pow(base: &BigRational, e: usize) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * base)
}

/// Decimal rendering used in CSV and tables.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        return r.to_integer().to_string();
    }
    match r.to_f64() {
        Some(f) => format!("{f:.6}"),
        None => format!("{}/{}", r.numer(), r.denom()),
    }
}

pub fn format_optional(r: &Option<BigRational>) -> String {
    r.as_ref().map(format_rational).unwrap_or_default()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallRow {
    pub spec: BallSpec,
    pub count: BigUint,
    pub two_term_value: BigRational,
    pub residual_norm: Option<BigRational>,
}

pub fn ball_row(spec: BallSpec) -> Result<BallRow> {
    let count = ball_count(spec);
    Ok(BallRow {
        two_term_value: two_term_value(spec.parity, spec.k, spec.p)?,
        residual_norm: residual_norm(&count, spec.parity, spec.k, spec.p)?,
        count,
        spec,
    })
}

pub fn ball_csv(rows: &[BallRow]) -> String {
    let mut out = String::from(BALL_CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.spec.parity,
            r.spec.k,
            r.spec.p,
            r.count,
            format_rational(&r.two_term_value),
            format_optional(&r.residual_norm)
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(parity: LatticeParity, k: usize, p: u32) -> u64 {
        ball_count(BallSpec::new(parity, k, p).unwrap())
            .to_u64()
            .unwrap()
    }

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn known_counts() {
        assert_eq!(count(LatticeParity::Even, 1, 5), 11);
        assert_eq!(count(LatticeParity::Even, 2, 2), 13);
        assert_eq!(count(LatticeParity::Even, 2, 4), 41);
        assert_eq!(count(LatticeParity::Odd, 2, 1), 8);
        assert_eq!(count(LatticeParity::Odd, 1, 1), 4);
        assert_eq!(count(LatticeParity::Even, 3, 0), 1);
        assert_eq!(count(LatticeParity::Odd, 3, 0), 2);
    }

    #[test]
    fn enumeration_small_shapes() {
        let plus = ball_enumerate(BallSpec::even(2, 1).unwrap()).unwrap();
        let expect: Vec<Point> = [[-1, 0], [0, -1], [0, 0], [0, 1], [1, 0]]
            .iter()
            .map(|c| Point::from_integers(c))
            .collect();
        assert_eq!(plus, expect);
        let odd = ball_enumerate(BallSpec::odd(1, 1).unwrap()).unwrap();
        let coords: Vec<i32> = odd.iter().map(|p| p.coords()[0]).collect();
        assert_eq!(coords, vec![-3, -1, 1, 3]);
    }

    #[test]
    fn enumeration_cap_is_named() {
        let err = ball_enumerate_capped(BallSpec::even(3, 10).unwrap(), 100).unwrap_err();
        assert!(err.to_string().contains("100"));
    }

    #[test]
    fn leading_term_values() {
        let t = leading_terms(LatticeParity::Even, 3).unwrap();
        assert_eq!((t.leading, t.second), (ratio(4, 3), ratio(2, 1)));
        let t = leading_terms(LatticeParity::Odd, 2).unwrap();
        assert_eq!((t.leading, t.second), (ratio(2, 1), ratio(4, 1)));
        let t = leading_terms(LatticeParity::Even, 1).unwrap();
        assert_eq!((t.leading, t.second), (ratio(2, 1), ratio(1, 1)));
    }

    #[test]
    fn residuals() {
        // |B^e_2(p)| = 2p^2 + 2p + 1
        let c = BigUint::from(41u32);
        let r = residual_norm(&c, LatticeParity::Even, 2, 4).unwrap();
        assert_eq!(r, Some(ratio(1, 1)));
        assert_eq!(residual_norm(&c, LatticeParity::Even, 3, 0).unwrap(), None);
    }

    #[test]
    fn csv_layout() {
        let rows = vec![ball_row(BallSpec::even(2, 2).unwrap()).unwrap()];
        assert_eq!(
            ball_csv(&rows),
            format!("{BALL_CSV_HEADER}\neven,2,2,13,12,1\n")
        );
    }
}
