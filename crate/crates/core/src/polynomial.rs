//! Exact polynomial arithmetic.
//!
//! [`BracketPoly`] is a polynomial with integer coefficients in three
//! commuting variables `A`, `B`, `d` (all exponents non-negative).
//! [`QuarterLaurent`] is a Laurent polynomial in `q = t^(1/4)`; exponents
//! are stored in quarter units, so `t` itself is exponent 4.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Exponents of `A^a B^b d^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub a: u32,
    pub b: u32,
    pub d: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { a: 0, b: 0, d: 0 };

    pub fn new(a: u32, b: u32, d: u32) -> Self {
        Monomial { a, b, d }
    }

    fn mul(self, other: Monomial) -> Monomial {
        Monomial {
            a: self.a + other.a,
            b: self.b + other.b,
            d: self.d + other.d,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BracketPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl BracketPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::ONE, BigInt::one())
    }

    pub fn a() -> Self {
        Self::monomial(Monomial::new(1, 0, 0), BigInt::one())
    }

    pub fn b() -> Self {
        Self::monomial(Monomial::new(0, 1, 0), BigInt::one())
    }

    pub fn d() -> Self {
        Self::monomial(Monomial::new(0, 0, 1), BigInt::one())
    }

    pub fn monomial(m: Monomial, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(m, coeff.into());
        p
    }

    /// Builds a polynomial from `(a, b, d, coeff)` tuples, summing repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (a, b, d, c) in terms {
            p.add_term(Monomial::new(a, b, d), c.into());
        }
        p
    }

    /// Builds a polynomial from small non-negative term counts, as produced by
    /// state-sum enumeration.
    pub fn from_counts<I>(counts: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, u64)>,
    {
        let mut p = Self::zero();
        for (m, c) in counts {
            p.add_term(m, BigInt::from(c));
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending lexicographic order of `(a, b, d)`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial, &BigInt)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplies by the monomial `A^a B^b d^k`.
    pub fn shift(&self, m: Monomial) -> Self {
        BracketPoly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        BracketPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, c * factor)).collect(),
        }
    }

    /// Exchanges the roles of `A` and `B`.
    pub fn swap_ab(&self) -> Self {
        BracketPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.b, m.a, m.d), c.clone()))
                .collect(),
        }
    }

    /// Terms present on exactly one side or with different coefficients,
    /// as `(monomial, self coeff, other coeff)`.
    pub fn diff_terms(&self, other: &BracketPoly) -> Vec<(Monomial, BigInt, BigInt)> {
        let mut keys: Vec<Monomial> = self.terms.keys().chain(other.terms.keys()).copied().collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter_map(|m| {
                let (x, y) = (self.coeff(m), other.coeff(m));
                (x != y).then_some((m, x, y))
            })
            .collect()
    }

    /// Substitutes `A = t^(-1/4)`, `B = t^(1/4)`, `d = -(t^(-1/2) + t^(1/2))`.
    pub fn specialize_jones(&self) -> QuarterLaurent {
        let mut out = QuarterLaurent::zero();
        for (m, c) in &self.terms {
            let base = m.b as i64 - m.a as i64;
            let k = m.d as i64;
            let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            // (t^(-1/2) + t^(1/2))^k = sum_j C(k, j) q^(2(2j - k))
            let mut binom = BigInt::one();
            for j in 0..=k {
                let e = base + 2 * (2 * j - k);
                out.add_term(e, &sign * &binom * c);
                binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<BracketTermJson> = self
            .terms
            .iter()
            .map(|(m, c)| BracketTermJson {
                a: m.a,
                b: m.b,
                d: m.d,
                c: big_to_json(c),
            })
            .collect();
        serde_json::json!({ "terms": terms })
    }
}

/// Multiplies by `(-1)^w t^(3w/4)`, the writhe normalization `(-A^3)^(-w)`
/// evaluated at `A = t^(-1/4)`.
pub fn normalize_writhe(p: &BracketPoly, writhe: i64) -> QuarterLaurent {
    p.specialize_jones().mul_monomial(3 * writhe, writhe.rem_euclid(2) == 1)
}

pub fn specialize_jones(p: &BracketPoly) -> QuarterLaurent {
    p.specialize_jones()
}

#[derive(Serialize, Deserialize)]
struct BracketTermJson {
    #[serde(rename = "A")]
    a: u32,
    #[serde(rename = "B")]
    b: u32,
    d: u32,
    c: serde_json::Value,
}

#[derive(Serialize, Deserialize)]
struct LaurentTermJson {
    q4: i64,
    c: serde_json::Value,
}

// Coefficients that fit an i64 are plain JSON numbers; larger ones are strings.
fn big_to_json(c: &BigInt) -> serde_json::Value {
    match i64::try_from(c) {
        Ok(v) => serde_json::Value::from(v),
        Err(_) => serde_json::Value::from(c.to_string()),
    }
}

impl Add for &BracketPoly {
    type Output = BracketPoly;

    fn add(self, rhs: &BracketPoly) -> BracketPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for BracketPoly {
    type Output = BracketPoly;

    fn add(mut self, rhs: BracketPoly) -> BracketPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&BracketPoly> for BracketPoly {
    fn add_assign(&mut self, rhs: &BracketPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Neg for &BracketPoly {
    type Output = BracketPoly;

    fn neg(self) -> BracketPoly {
        BracketPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Sub for &BracketPoly {
    type Output = BracketPoly;

    fn sub(self, rhs: &BracketPoly) -> BracketPoly {
        self + &(-rhs)
    }
}

impl Mul for &BracketPoly {
    type Output = BracketPoly;

    fn mul(self, rhs: &BracketPoly) -> BracketPoly {
        let mut out = BracketPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(*m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for BracketPoly {
    type Output = BracketPoly;

    fn mul(self, rhs: BracketPoly) -> BracketPoly {
        &self * &rhs
    }
}

/// Descending lexicographic order, e.g. `A^2 + 2*A*B*d + B^2`.
impl fmt::Display for BracketPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mut vars = Vec::new();
            for (name, e) in [("A", m.a), ("B", m.b), ("d", m.d)] {
                match e {
                    0 => {}
                    1 => vars.push(name.to_string()),
                    _ => vars.push(format!("{name}^{e}")),
                }
            }
            write_term(f, i == 0, c, &vars.join("*"), "*")?;
        }
        Ok(())
    }
}

fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &BigInt,
    body: &str,
    joiner: &str,
) -> fmt::Result {
    let negative = c.is_negative();
    let abs = c.abs();
    match (first, negative) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    if body.is_empty() {
        write!(f, "{abs}")
    } else if abs.is_one() {
        write!(f, "{body}")
    } else {
        write!(f, "{abs}{joiner}{body}")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QuarterLaurent {
    terms: BTreeMap<i64, BigInt>,
}

impl QuarterLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    /// `coeff * t^(exp/4)`.
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending exponent order; exponents in quarter units.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Multiplies by `± t^(shift/4)`.
    pub fn mul_monomial(&self, shift: i64, negate: bool) -> Self {
        QuarterLaurent {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + shift, if negate { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Substitutes `t -> t^-1`.
    pub fn mirror(&self) -> Self {
        QuarterLaurent {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<LaurentTermJson> = self
            .terms
            .iter()
            .map(|(e, c)| LaurentTermJson {
                q4: *e,
                c: big_to_json(c),
            })
            .collect();
        serde_json::json!({ "terms": terms })
    }
}

impl Add for &QuarterLaurent {
    type Output = QuarterLaurent;

    fn add(self, rhs: &QuarterLaurent) -> QuarterLaurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Mul for &QuarterLaurent {
    type Output = QuarterLaurent;

    fn mul(self, rhs: &QuarterLaurent) -> QuarterLaurent {
        let mut out = QuarterLaurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

fn format_t_power(exp: i64) -> String {
    if exp % 4 == 0 {
        match exp / 4 {
            0 => String::new(),
            1 => "t".to_string(),
            n => format!("t^{n}"),
        }
    } else {
        let g = exp.gcd(&4);
        format!("t^({}/{})", exp / g, 4 / g)
    }
}

/// Ascending exponent order, e.g. `-t^-4 + t^-3 + t^-1`; fractional
/// exponents print as `t^(3/4)`.
impl fmt::Display for QuarterLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            write_term(f, i == 0, c, &format_t_power(*e), "*")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ad_plus_b() -> BracketPoly {
        BracketPoly::from_terms([(1, 0, 1, 1), (0, 1, 0, 1)])
    }

    #[test]
    fn add_cancels() {
        let p = BracketPoly::from_terms([(1, 0, 0, 1), (0, 1, 1, 1)]);
        let q = BracketPoly::from_terms([(1, 0, 0, -1)]);
        assert_eq!(&p + &q, BracketPoly::from_terms([(0, 1, 1, 1)]));
    }

    #[test]
    fn multiply_distributes_over_d() {
        let p = BracketPoly::a() + BracketPoly::b();
        assert_eq!(&p * &BracketPoly::d(), BracketPoly::from_terms([(1, 0, 1, 1), (0, 1, 1, 1)]));
        assert!((&p * &BracketPoly::zero()).is_zero());
    }

    #[test]
    fn specialize_basics() {
        assert_eq!(BracketPoly::one().specialize_jones(), QuarterLaurent::one());
        assert_eq!(
            BracketPoly::d().specialize_jones(),
            QuarterLaurent::from_terms([(-2, -1), (2, -1)])
        );
        // A + B d -> t^(-1/4) - t^(-1/4) - t^(3/4)
        let p = BracketPoly::from_terms([(1, 0, 0, 1), (0, 1, 1, 1)]);
        assert_eq!(p.specialize_jones(), QuarterLaurent::monomial(3, -1));
        // A d + B -> -t^(-3/4)
        assert_eq!(ad_plus_b().specialize_jones(), QuarterLaurent::monomial(-3, -1));
    }

    #[test]
    fn writhe_normalization_of_kinks() {
        assert_eq!(normalize_writhe(&BracketPoly::one(), 0), QuarterLaurent::one());
        assert_eq!(normalize_writhe(&ad_plus_b(), 1), QuarterLaurent::one());
        let p = BracketPoly::from_terms([(1, 0, 0, 1), (0, 1, 1, 1)]);
        assert_eq!(normalize_writhe(&p, -1), QuarterLaurent::one());
        assert_eq!(
            normalize_writhe(&BracketPoly::d(), 0),
            QuarterLaurent::from_terms([(-2, -1), (2, -1)])
        );
    }

    #[test]
    fn display_forms() {
        let p = BracketPoly::from_terms([(2, 0, 0, 1), (1, 1, 1, 2), (0, 2, 0, 1)]);
        assert_eq!(p.to_string(), "A^2 + 2*A*B*d + B^2");
        assert_eq!(ad_plus_b().to_string(), "A*d + B");
        assert_eq!(BracketPoly::zero().to_string(), "0");
        let j = QuarterLaurent::from_terms([(-16, -1), (-12, 1), (-4, 1)]);
        assert_eq!(j.to_string(), "-t^-4 + t^-3 + t^-1");
        let k = QuarterLaurent::from_terms([(-2, -1), (3, 2), (4, 1), (0, -3)]);
        assert_eq!(k.to_string(), "-t^(-1/2) - 3 + 2*t^(3/4) + t");
    }

    #[test]
    fn json_shape() {
        let v = ad_plus_b().to_json();
        assert_eq!(
            v.to_string(),
            r#"{"terms":[{"A":0,"B":1,"c":1,"d":0},{"A":1,"B":0,"c":1,"d":1}]}"#
        );
        let j = QuarterLaurent::from_terms([(-3, -1)]).to_json();
        assert_eq!(j.to_string(), r#"{"terms":[{"c":-1,"q4":-3}]}"#);
    }

    fn arb_poly() -> impl Strategy<Value = BracketPoly> {
        prop::collection::vec((0u32..4, 0u32..4, 0u32..4, -5i64..6), 0..6)
            .prop_map(BracketPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert!((&p - &p).is_zero());
        }

        #[test]
        fn specialization_is_a_homomorphism(p in arb_poly(), q in arb_poly()) {
            prop_assert_eq!(
                (&p * &q).specialize_jones(),
                &p.specialize_jones() * &q.specialize_jones()
            );
            prop_assert_eq!(
                (&p + &q).specialize_jones(),
                &p.specialize_jones() + &q.specialize_jones()
            );
        }

        #[test]
        fn writhe_shift_composes(p in arb_poly(), w1 in -6i64..7, w2 in -6i64..7) {
            let lhs = normalize_writhe(&p, w1 + w2);
            let rhs = normalize_writhe(&p, w1).mul_monomial(3 * w2, w2.rem_euclid(2) == 1);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
