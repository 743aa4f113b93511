use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{Field, Scalar};
use super::matrix::ExactMatrix;

/// Monic minimal polynomial of a square matrix, coefficients from degree 0 upward.
pub fn minimal_polynomial(m: &ExactMatrix) -> Vec<Scalar> {
    assert!(m.is_square());
    let f = m.field();
    let n = m.rows();
    let mut powers: Vec<Vec<Scalar>> = vec![ExactMatrix::identity(f, n).into_entries()];
    let mut cur = ExactMatrix::identity(f, n);
    loop {
        cur = cur.mul(m);
        let target = cur.entries().to_vec();
        let basis = ExactMatrix::from_columns(f, n * n, &powers);
        if let Some(c) = basis.solve(&target) {
            let mut poly: Vec<Scalar> = c.iter().map(|x| f.neg(x)).collect();
            poly.push(f.one());
            return poly;
        }
        powers.push(target);
    }
}

fn eval(f: Field, poly: &[Scalar], x: &Scalar) -> Scalar {
    poly.iter()
        .rev()
        .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
}

fn divisors(n: &BigInt, limit: u64) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n > limit {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    Some(out)
}

/// Distinct roots in the ground field. Over Q this uses the rational root test and gives
/// up (returning what it has) when coefficients are too large to enumerate divisors.
pub fn rational_roots(f: Field, poly: &[Scalar]) -> Vec<Scalar> {
    let mut poly: Vec<Scalar> = poly.to_vec();
    while poly.last().is_some_and(Zero::is_zero) {
        poly.pop();
    }
    if poly.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    if poly[0].is_zero() {
        roots.push(f.zero());
        let shift = poly.iter().take_while(|c| c.is_zero()).count();
        poly.drain(..shift);
        if poly.len() <= 1 {
            return roots;
        }
    }
    match f {
        Field::Prime(p) => {
            if p <= 100_000 {
                for v in 1..p {
                    let x = f.from_i64(v as i64);
                    if eval(f, &poly, &x).is_zero() {
                        roots.push(x);
                    }
                }
            }
        }
        Field::Rationals => {
            let lcm = poly.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            let ints: Vec<BigInt> = poly
                .iter()
                .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
                .collect();
            let (Some(num), Some(den)) = (
                divisors(&ints[0], 1_000_000_000),
                divisors(ints.last().unwrap(), 1_000_000_000),
            ) else {
                return roots;
            };
            let mut cands: Vec<Scalar> = Vec::new();
            for a in &num {
                for b in &den {
                    for s in [1i64, -1] {
                        let c = BigRational::new(BigInt::from(*a) * s, BigInt::from(*b));
                        if !cands.contains(&c) {
                            cands.push(c);
                        }
                    }
                }
            }
            cands.sort();
            for c in cands {
                if eval(f, &poly, &c).is_zero() {
                    roots.push(c);
                }
            }
        }
    }
    roots
}
