//! Exact arithmetic in the ring of integer Laurent polynomials `Z[q, q^-1]`,
//! together with the quantum combinatorics ([n], [n]!, quantum binomials)
//! used by every other module.
//!
//! All coefficients are arbitrary-precision integers; there is no floating
//! point anywhere in the crate.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Errors raised by exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LaurentError {
    /// An exact division left a remainder.
    #[error("exact division left a remainder")]
    DivisionNotExact,
    /// Division by the zero polynomial.
    #[error("division by zero polynomial")]
    DivisionByZero,
    /// An argument was outside the operation's domain (e.g. binomial with a > n).
    #[error("argument out of range: {0}")]
    OutOfRange(String),
}

/// An element of `Z[q, q^-1]`, stored as a map from exponent to nonzero
/// coefficient. Iteration order is ascending in the exponent.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    /// `c * q^e`, dropped if `c = 0`.
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let c: BigInt = coeff.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// `q^e`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(exp, 1)
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Self {
        let mut p = Self::zero();
        for &(e, c) in pairs {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    /// True if this is `±q^e` for some exponent `e`.
    pub fn is_unit_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().unwrap().abs().is_one()
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiply by `q^e`.
    pub fn shifted(&self, e: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (k + e, v.clone())).collect(),
        }
    }

    /// The bar involution `q -> q^-1` (exponent negation).
    pub fn bar(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (-k, v.clone())).collect(),
        }
    }

    /// Exact quotient `self / div`, or `DivisionNotExact` if no Laurent
    /// polynomial `c` satisfies `div * c = self`.
    pub fn exact_div(&self, div: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        exact_divide(self, div)
    }

    /// JSON rendering: array of `[exponent, coefficient]` pairs in ascending
    /// exponent order. Coefficients that fit in an `i64` are emitted as JSON
    /// numbers, larger ones as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        let pairs: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let coeff = match i64::try_from(c.clone()) {
                    Ok(v) => serde_json::json!(v),
                    Err(_) => serde_json::json!(c.to_string()),
                };
                serde_json::json!([e, coeff])
            })
            .collect();
        serde_json::Value::Array(pairs)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

/// Canonical text rendering: terms in ascending exponent, `q^n` syntax
/// (with `q` for exponent 1), e.g. `q^-2 + 1 + q^2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let q_part = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            if q_part.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{q_part}")?;
            } else {
                write!(f, "{abs}*{q_part}")?;
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms.iter() {
            for (e2, c2) in rhs.terms.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $trait::$method(self, &rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms.iter() {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms.iter() {
            self.add_term(*e, -c.clone());
        }
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        let prod = &*self * rhs;
        *self = prod;
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

/// The balanced quantum integer `[n] = q^{n-1} + q^{n-3} + ... + q^{1-n}`,
/// extended by `[0] = 0` and `[-n] = -[n]`.
pub fn quantum_int(n: i64) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::zero();
    }
    if n < 0 {
        return -quantum_int(-n);
    }
    let mut p = LaurentPoly::zero();
    let mut e = n - 1;
    while e >= 1 - n {
        p.add_term(e, BigInt::one());
        e -= 2;
    }
    p
}

/// The balanced quantum factorial `[n]! = [n][n-1]...[1]`, with `[0]! = 1`.
pub fn quantum_factorial(n: i64) -> LaurentPoly {
    assert!(n >= 0, "quantum_factorial of a negative integer");
    let mut p = LaurentPoly::one();
    for m in 1..=n {
        p *= &quantum_int(m);
    }
    p
}

/// The quantum binomial `[n choose a] = [n]!/([a]![n-a]!)`, computed by
/// exact division. Fails with `DivisionNotExact` only if the internal
/// arithmetic is broken; `OutOfRange` if `a` is outside `0..=n`.
pub fn quantum_binomial(n: i64, a: i64) -> Result<LaurentPoly, LaurentError> {
    if n < 0 || a < 0 || a > n {
        return Err(LaurentError::OutOfRange(format!("binomial({n}, {a})")));
    }
    let num = quantum_factorial(n);
    let den = &quantum_factorial(a) * &quantum_factorial(n - a);
    exact_divide(&num, &den)
}

/// Exact division in `Z[q, q^-1]`: returns `c` with `b * c = a`, or
/// `DivisionNotExact` if no such `c` exists.
pub fn exact_divide(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
    if b.is_zero() {
        return Err(LaurentError::DivisionByZero);
    }
    if a.is_zero() {
        return Ok(LaurentPoly::zero());
    }
    // Normalize both to ordinary polynomials with nonzero constant term by
    // shifting out the lowest exponents; the quotient's shift is the difference.
    let sa = a.min_exp().unwrap();
    let sb = b.min_exp().unwrap();
    let mut rem = a.shifted(-sa);
    let divisor = b.shifted(-sb);
    let div_low = divisor.coeff(0);
    let mut quot = LaurentPoly::zero();
    // Repeatedly cancel the lowest remaining term of the remainder.
    while !rem.is_zero() {
        let e = rem.min_exp().unwrap();
        let c = rem.coeff(e);
        if !(&c % &div_low).is_zero() {
            return Err(LaurentError::DivisionNotExact);
        }
        let qc = &c / &div_low;
        let term = LaurentPoly::monomial(e, qc);
        rem -= &(&term * &divisor);
        quot += &term;
        if rem.min_exp().map(|m| m <= e).unwrap_or(false) {
            // Lowest term failed to cancel: cannot happen given div_rem above.
            return Err(LaurentError::DivisionNotExact);
        }
        if quot.max_exp().unwrap_or(0) > a.max_exp().unwrap() - sb + 1 {
            return Err(LaurentError::DivisionNotExact);
        }
    }
    Ok(quot.shifted(sa - sb))
}

/// The bar involution `q -> q^-1` as a free function.
pub fn bar_involution(a: &LaurentPoly) -> LaurentPoly {
    a.bar()
}

/// A fraction of Laurent polynomials. These appear only transiently inside
/// web computations (normalizations by quantum factorials); every externally
/// visible scalar must reduce to an integral `LaurentPoly`.
///
/// The denominator is kept unit-normalized: its lowest term has exponent 0
/// and positive sign. Equality is cross-multiplication equality.
#[derive(Debug, Clone)]
pub struct ScalarFrac {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl ScalarFrac {
    pub fn from_poly(p: LaurentPoly) -> Self {
        ScalarFrac { num: p, den: LaurentPoly::one() }
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "ScalarFrac with zero denominator");
        let mut f = ScalarFrac { num, den };
        f.reduce();
        f
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    /// True if the denominator divides the numerator exactly.
    pub fn is_integral(&self) -> bool {
        self.den.is_one() || exact_divide(&self.num, &self.den).is_ok()
    }

    /// Reduce to a plain Laurent polynomial, failing if not integral.
    pub fn to_poly(&self) -> Result<LaurentPoly, LaurentError> {
        if self.den.is_one() {
            Ok(self.num.clone())
        } else {
            exact_divide(&self.num, &self.den)
        }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        if let Ok(q) = exact_divide(&self.num, &self.den) {
            self.num = q;
            self.den = LaurentPoly::one();
            return;
        }
        // Unit-normalize the denominator by its lowest term: exponent 0,
        // positive leading (lowest) coefficient.
        let e = self.den.min_exp().unwrap();
        let neg = self.den.coeff(e).is_negative();
        self.den = self.den.shifted(-e);
        self.num = self.num.shifted(-e);
        if neg {
            self.den = -&self.den;
            self.num = -&self.num;
        }
    }

    pub fn add(&self, rhs: &ScalarFrac) -> ScalarFrac {
        if self.den == rhs.den {
            return ScalarFrac::new(&self.num + &rhs.num, self.den.clone());
        }
        ScalarFrac::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }

    pub fn mul(&self, rhs: &ScalarFrac) -> ScalarFrac {
        ScalarFrac::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    pub fn mul_poly(&self, rhs: &LaurentPoly) -> ScalarFrac {
        ScalarFrac::new(&self.num * rhs, self.den.clone())
    }

    pub fn neg(&self) -> ScalarFrac {
        ScalarFrac { num: -&self.num, den: self.den.clone() }
    }
}

impl PartialEq for ScalarFrac {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}
impl Eq for ScalarFrac {}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force division oracle: long division from the top exponent,
    /// independent of `exact_divide`'s bottom-up loop.
    fn oracle_divide(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
        if b.is_zero() {
            return None;
        }
        if a.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let mut rem = a.clone();
        let mut quot = LaurentPoly::zero();
        let b_top = b.max_exp().unwrap();
        let b_top_coeff = b.coeff(b_top);
        for _ in 0..10_000 {
            if rem.is_zero() {
                return Some(quot);
            }
            let e = rem.max_exp().unwrap();
            let c = rem.coeff(e);
            if !(&c % &b_top_coeff).is_zero() {
                return None;
            }
            let qc = &c / &b_top_coeff;
            let t = LaurentPoly::monomial(e - b_top, qc);
            rem -= &(&t * b);
            quot += &t;
            if rem.max_exp().map(|m| m >= e).unwrap_or(false) {
                return None;
            }
        }
        None
    }

    #[test]
    fn quantum_int_values() {
        assert_eq!(quantum_int(1), LaurentPoly::one());
        assert_eq!(quantum_int(2), LaurentPoly::from_pairs(&[(-1, 1), (1, 1)]));
        assert_eq!(
            quantum_int(-3),
            -LaurentPoly::from_pairs(&[(-2, 1), (0, 1), (2, 1)])
        );
        assert!(quantum_int(0).is_zero());
    }

    #[test]
    fn quantum_int_telescoping() {
        // (q - q^-1) [n] = q^n - q^-n for all n >= 1.
        let q_minus = LaurentPoly::from_pairs(&[(1, 1), (-1, -1)]);
        for n in 1..=12 {
            let lhs = &q_minus * &quantum_int(n);
            let rhs = LaurentPoly::from_pairs(&[(n, 1), (-n, -1)]);
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn binomial_values() {
        // k = 3 case of the relation-1 multiplicity.
        assert_eq!(
            quantum_binomial(3, 1).unwrap(),
            LaurentPoly::from_pairs(&[(-2, 1), (0, 1), (2, 1)])
        );
        assert_eq!(quantum_binomial(2, 2).unwrap(), LaurentPoly::one());
        // [4 choose 2] frozen from the brute-force division oracle.
        let num = &quantum_int(4) * &quantum_int(3);
        let expected = oracle_divide(&num, &quantum_int(2)).unwrap();
        assert_eq!(
            expected,
            LaurentPoly::from_pairs(&[(-4, 1), (-2, 1), (0, 2), (2, 1), (4, 1)])
        );
        assert_eq!(quantum_binomial(4, 2).unwrap(), expected);
    }

    #[test]
    fn binomial_pascal_identity() {
        // [n choose a] = q^a [n-1 choose a] + q^{a-n} [n-1 choose a-1].
        for n in 2..=8i64 {
            for a in 1..n {
                let lhs = quantum_binomial(n, a).unwrap();
                let rhs = &quantum_binomial(n - 1, a).unwrap().shifted(a)
                    + &quantum_binomial(n - 1, a - 1).unwrap().shifted(a - n);
                assert_eq!(lhs, rhs, "n = {n}, a = {a}");
            }
        }
    }

    #[test]
    fn binomial_out_of_range() {
        assert!(matches!(quantum_binomial(2, 3), Err(LaurentError::OutOfRange(_))));
        assert!(matches!(quantum_binomial(2, -1), Err(LaurentError::OutOfRange(_))));
    }

    #[test]
    fn exact_divide_examples() {
        let a = LaurentPoly::from_pairs(&[(2, 1), (-2, -1)]);
        let b = LaurentPoly::from_pairs(&[(1, 1), (-1, -1)]);
        assert_eq!(exact_divide(&a, &b).unwrap(), quantum_int(2));

        let prod = &quantum_int(3) * &quantum_int(2);
        assert_eq!(exact_divide(&prod, &quantum_int(2)).unwrap(), quantum_int(3));

        let a = LaurentPoly::from_pairs(&[(1, 1), (0, 1)]);
        let b = LaurentPoly::from_pairs(&[(1, 1), (0, -1)]);
        assert_eq!(exact_divide(&a, &b), Err(LaurentError::DivisionNotExact));

        assert_eq!(
            exact_divide(&LaurentPoly::one(), &LaurentPoly::zero()),
            Err(LaurentError::DivisionByZero)
        );
    }

    #[test]
    fn bar_involution_examples() {
        let p = LaurentPoly::from_pairs(&[(2, 1), (0, 3)]);
        assert_eq!(p.bar(), LaurentPoly::from_pairs(&[(-2, 1), (0, 3)]));
        assert_eq!(quantum_int(5).bar(), quantum_int(5));
        for n in 0..=7 {
            for a in 0..=n {
                let b = quantum_binomial(n, a).unwrap();
                assert_eq!(b.bar(), b);
            }
        }
    }

    #[test]
    fn display_canonical() {
        let p = LaurentPoly::from_pairs(&[(-2, 1), (0, 1), (2, 1)]);
        assert_eq!(p.to_string(), "q^-2 + 1 + q^2");
        assert_eq!(quantum_int(2).to_string(), "q^-1 + q");
        let m = LaurentPoly::from_pairs(&[(1, -2), (3, 1)]);
        assert_eq!(m.to_string(), "-2*q + q^3");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_pairs_ascending() {
        let p = LaurentPoly::from_pairs(&[(2, 1), (-1, -3)]);
        assert_eq!(p.to_json(), serde_json::json!([[-1, -3], [2, 1]]));
    }

    #[test]
    fn scalar_frac_basics() {
        let half = ScalarFrac::new(quantum_int(3), quantum_int(2));
        assert!(!half.is_integral());
        let whole = half.mul(&ScalarFrac::from_poly(quantum_int(2)));
        assert!(whole.is_integral());
        assert_eq!(whole.to_poly().unwrap(), quantum_int(3));

        // Cross-multiplication equality.
        let a = ScalarFrac::new(quantum_int(4), quantum_int(2));
        let b = ScalarFrac::from_poly(exact_divide(&quantum_int(4), &quantum_int(2)).unwrap());
        assert_eq!(a, b);
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms(
            xs in proptest::collection::vec((-6i64..=6, -9i64..=9), 0..6),
            ys in proptest::collection::vec((-6i64..=6, -9i64..=9), 0..6),
            zs in proptest::collection::vec((-6i64..=6, -9i64..=9), 0..6),
        ) {
            let a = LaurentPoly::from_pairs(&xs);
            let b = LaurentPoly::from_pairs(&ys);
            let c = LaurentPoly::from_pairs(&zs);
            proptest::prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            proptest::prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            proptest::prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            proptest::prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn bar_is_involutive(xs in proptest::collection::vec((-6i64..=6, -9i64..=9), 0..6)) {
            let a = LaurentPoly::from_pairs(&xs);
            proptest::prop_assert_eq!(a.bar().bar(), a);
        }

        #[test]
        fn divide_multiply_roundtrip(
            xs in proptest::collection::vec((-5i64..=5, -9i64..=9), 1..5),
            ys in proptest::collection::vec((-5i64..=5, -9i64..=9), 1..5),
        ) {
            let a = LaurentPoly::from_pairs(&xs);
            let b = LaurentPoly::from_pairs(&ys);
            proptest::prop_assume!(!a.is_zero() && !b.is_zero());
            let prod = &a * &b;
            proptest::prop_assert_eq!(exact_divide(&prod, &b).unwrap(), a);
        }
    }
}
