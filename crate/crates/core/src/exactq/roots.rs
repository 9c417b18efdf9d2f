//! Rational roots of univariate polynomials.
//!
//! Linear and quadratic inputs are solved directly. Higher degrees clear
//! denominators and test every rational-root-theorem candidate p/q, with p
//! dividing the constant term and q the leading coefficient.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{denom_lcm, rational_sqrt, Rational};
use super::uni::UniPoly;
use super::ExactError;

/// Default cap on the bit length of integers the candidate search will factor.
pub const DEFAULT_FACTOR_BITS: u64 = 64;

/// Primitive integer coefficients (lowest degree first) of a nonzero
/// polynomial, with a positive leading coefficient.
pub fn integer_coefficients(f: &UniPoly) -> Vec<BigInt> {
    let l = denom_lcm(f.coeffs());
    let mut ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !content.is_zero() {
        let sign = if ints.last().is_some_and(|c| c.is_negative()) { -1 } else { 1 };
        let content = content * sign;
        for c in &mut ints {
            *c /= &content;
        }
    }
    ints
}

/// Shape of the candidate search for a polynomial with nonzero constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CandidatePlan {
    /// Degree ≤ 2: solved in closed form.
    Direct,
    /// Number of ±p/q candidates the rational root theorem would test.
    Candidates(u128),
    /// Constant or leading coefficient exceeds the factoring threshold.
    TooLarge,
}

/// Decides how `rational_roots_with` would handle `f` without doing the
/// candidate evaluation.
pub fn candidate_plan(f: &UniPoly, max_bits: u64) -> Result<CandidatePlan, ExactError> {
    if f.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    let ints = strip_zero_roots(integer_coefficients(f));
    if ints.len() <= 3 {
        return Ok(CandidatePlan::Direct);
    }
    let (c0, lead) = (ints[0].abs(), ints.last().unwrap().abs());
    if c0.bits() > max_bits || lead.bits() > max_bits {
        return Ok(CandidatePlan::TooLarge);
    }
    let count = |n: &BigInt| -> u128 {
        factorize(n.to_u64().unwrap())
            .iter()
            .map(|(_, e)| *e as u128 + 1)
            .product()
    };
    Ok(CandidatePlan::Candidates(2 * count(&c0) * count(&lead)))
}

fn strip_zero_roots(mut ints: Vec<BigInt>) -> Vec<BigInt> {
    let k = ints.iter().take_while(|c| c.is_zero()).count();
    ints.drain(..k);
    ints
}

/// All rational roots of `f`, sorted ascending, using the default threshold.
pub fn rational_roots(f: &UniPoly) -> Result<Vec<Rational>, ExactError> {
    rational_roots_with(f, DEFAULT_FACTOR_BITS)
}

/// All rational roots of `f`, sorted ascending. Errors with
/// `CoefficientTooLarge` when the candidate search would need to factor an
/// integer longer than `max_bits`.
pub fn rational_roots_with(f: &UniPoly, max_bits: u64) -> Result<Vec<Rational>, ExactError> {
    if f.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    let all = integer_coefficients(f);
    let mut roots = Vec::new();
    if all[0].is_zero() {
        roots.push(Rational::zero());
    }
    let ints = strip_zero_roots(all);
    match ints.len() {
        0 | 1 => {}
        2 => roots.push(Rational::new(-&ints[0], ints[1].clone())),
        3 => {
            let (c, b, a) = (&ints[0], &ints[1], &ints[2]);
            let disc = Rational::from_integer(b * b - BigInt::from(4) * a * c);
            if let Some(s) = rational_sqrt(&disc) {
                let two_a = Rational::from_integer(BigInt::from(2) * a);
                let mb = Rational::from_integer(-b);
                roots.push((&mb - &s) / &two_a);
                roots.push((&mb + &s) / &two_a);
            }
        }
        _ => {
            let (c0, lead) = (ints[0].abs(), ints.last().unwrap().abs());
            if c0.bits() > max_bits || lead.bits() > max_bits {
                return Err(ExactError::CoefficientTooLarge { bits: max_bits });
            }
            let nums = divisors(c0.to_u64().unwrap());
            let dens = divisors(lead.to_u64().unwrap());
            for p in &nums {
                for q in &dens {
                    if p.gcd(q) != 1 {
                        continue;
                    }
                    for sign in [1i64, -1] {
                        let num = BigInt::from(*p) * sign;
                        let den = BigInt::from(*q);
                        if homogeneous_eval(&ints, &num, &den).is_zero() {
                            roots.push(Rational::new(num, den));
                        }
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

/// q^n f(p/q) for integer coefficients, exact.
fn homogeneous_eval(ints: &[BigInt], p: &BigInt, q: &BigInt) -> BigInt {
    // Horner on the homogenized form: acc = acc*p + c_i q^(n-i).
    let mut acc = BigInt::zero();
    let mut q_pow = BigInt::one();
    for c in ints.iter().rev() {
        acc = acc * p + c * &q_pow;
        q_pow *= q;
    }
    acc
}

fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let current = divs.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            divs.extend(current.iter().map(|d| d * pk));
        }
    }
    divs.sort_unstable();
    divs
}

/// Prime factorization of a 64-bit integer: trial division by small primes,
/// then Miller-Rabin and Pollard-Brent rho on the remaining cofactor.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    if n <= 1 {
        return out;
    }
    let mut n = n;
    let push = |p: u64, out: &mut Vec<(u64, u32)>| match out.iter_mut().find(|(q, _)| *q == p) {
        Some(entry) => entry.1 += 1,
        None => out.push((p, 1)),
    };
    let mut d = 2u64;
    while d < 1000 && d * d <= n {
        while n.is_multiple_of(d) {
            push(d, &mut out);
            n /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime(m) {
            push(m, &mut out);
            continue;
        }
        let f = pollard_brent(m);
        stack.push(f);
        stack.push(m / f);
    }
    out.sort_unstable();
    out
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'outer: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// A nontrivial factor of the odd composite `n`.
fn pollard_brent(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{parse_poly, rat_make, Var};

    fn roots(s: &str) -> Vec<Rational> {
        rational_roots(&parse_poly(s).unwrap().to_uni(Var::Y).unwrap()).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        rat_make(n, d).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(roots("2*y^2 - y"), vec![q(0, 1), q(1, 2)]);
        assert!(roots("y^2 - 2").is_empty());
        assert_eq!(roots("2*y^2 - 5*y - 3"), vec![q(-1, 2), q(3, 1)]);
        assert!(rational_roots(&UniPoly::zero(Var::Y)).is_err());
    }

    #[test]
    fn higher_degree_uses_candidates() {
        // (y - 2/3)(y + 5)(y^2 + 1)(y - 7)
        let r = roots("(3*y - 2)*(y + 5)*(y^2 + 1)*(y - 7)");
        assert_eq!(r, vec![q(-5, 1), q(2, 3), q(7, 1)]);
        let r = roots("y^3*(y-1)^2*(4*y+3)");
        assert_eq!(r, vec![q(-3, 4), q(0, 1), q(1, 1)]);
    }

    #[test]
    fn too_large_coefficients_are_reported() {
        let f = parse_poly("y^3 + y + 340282366920938463463374607431768211457")
            .unwrap()
            .to_uni(Var::Y)
            .unwrap();
        assert!(matches!(
            rational_roots(&f),
            Err(ExactError::CoefficientTooLarge { .. })
        ));
        assert_eq!(candidate_plan(&f, 64).unwrap(), CandidatePlan::TooLarge);
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(1), vec![]);
        let big = 4294967291u64 * 4294967279u64;
        assert_eq!(factorize(big), vec![(4294967279, 1), (4294967291, 1)]);
        assert_eq!(factorize(18446744073709551557), vec![(18446744073709551557, 1)]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }
}
