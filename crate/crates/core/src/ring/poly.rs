use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::spec::same_ring;
use crate::ring::{Monomial, RingSpec, TermOrder, Var};

/// A sparse multivariate polynomial with exact rational coefficients, tagged
/// with the ring it lives in. Terms never carry zero coefficients, so the
/// representation is canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<RingSpec>,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        // Ring content deliberately not hashed; Eq still distinguishes.
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(ring: Arc<RingSpec>) -> Self {
        Polynomial {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: Arc<RingSpec>) -> Self {
        Self::constant(ring, BigRational::one())
    }

    pub fn constant(ring: Arc<RingSpec>, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { ring, terms }
    }

    pub fn from_int(ring: Arc<RingSpec>, n: i64) -> Self {
        Self::constant(ring, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn variable(ring: Arc<RingSpec>, v: Var) -> Result<Self> {
        if v.index() >= ring.num_vars() {
            return Err(Error::UnknownSymbol(format!("v{}", v.0)));
        }
        Ok(Self::term(ring, Monomial::var(v), BigRational::one()))
    }

    pub fn var_named(ring: &Arc<RingSpec>, name: &str) -> Result<Self> {
        let v = ring
            .var(name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))?;
        Self::variable(ring.clone(), v)
    }

    pub fn term(ring: Arc<RingSpec>, m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { ring, terms }
    }

    pub fn from_terms(
        ring: Arc<RingSpec>,
        it: impl IntoIterator<Item = (Monomial, BigRational)>,
    ) -> Self {
        let mut p = Polynomial::zero(ring);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn from_raw_terms(ring: Arc<RingSpec>, raw: Vec<(Monomial, BigRational)>) -> Self {
        Self::from_terms(ring, raw)
    }

    pub(crate) fn raw_terms(&self) -> Vec<(Monomial, BigRational)> {
        self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect()
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn constant_value(&self) -> Option<&BigRational> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_one() {
                return Some(c);
            }
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn vars_used(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    pub fn uses_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.require_same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.require_same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.require_same_ring(other)?;
        let mut out = Polynomial::zero(self.ring.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn negated(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring.clone());
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring.clone());
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, q)| (k.mul(m), q * c))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(self.ring.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base).expect("same ring");
            }
        }
        acc
    }

    fn require_same_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "{} vs {}",
                self.ring, other.ring
            )))
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Degree in the main-variable block only.
    pub fn main_degree(&self) -> u32 {
        let ring = self.ring.clone();
        self.terms
            .keys()
            .map(|m| m.degree_where(|v| ring.is_main(v)))
            .max()
            .unwrap_or(0)
    }

    pub fn degree_where(&self, mut pred: impl FnMut(Var) -> bool) -> u32 {
        self.terms
            .keys()
            .map(|m| m.degree_where(&mut pred))
            .max()
            .unwrap_or(0)
    }

    pub fn leading_term(&self, order: &TermOrder) -> Result<(Monomial, BigRational)> {
        let mut best: Option<&Monomial> = None;
        for m in self.terms.keys() {
            best = Some(match best {
                None => m,
                Some(b) => order.max(b, m),
            });
        }
        match best {
            None => Err(Error::ZeroPolynomial),
            Some(m) => Ok((m.clone(), self.terms[m].clone())),
        }
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Result<Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Scale so the leading coefficient under `order` is 1.
    pub fn monic(&self, order: &TermOrder) -> Polynomial {
        match self.leading_term(order) {
            Err(_) => self.clone(),
            Ok((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Integer-content-free, denominator-free representative with positive
    /// leading coefficient under the ring's default order.
    pub fn normalize(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut denom_lcm = BigInt::one();
        let mut numer_gcd = BigInt::zero();
        for c in self.terms.values() {
            denom_lcm = denom_lcm.lcm(c.denom());
            numer_gcd = numer_gcd.gcd(c.numer());
        }
        let scale = BigRational::new(denom_lcm, numer_gcd);
        let mut out = self.scale(&scale);
        let order = self.ring.default_order();
        let (_, lc) = out.leading_term(&order).expect("nonzero");
        if lc.is_negative() {
            out = out.negated();
        }
        out
    }

    /// Image under the ring homomorphism sending each variable to the given
    /// polynomial in `target`. Every variable that actually occurs must have
    /// an image.
    pub fn apply_map(
        &self,
        images: &BTreeMap<Var, Polynomial>,
        target: &Arc<RingSpec>,
    ) -> Result<Polynomial> {
        for img in images.values() {
            if !same_ring(img.ring(), target) {
                return Err(Error::RingMismatch(
                    "image polynomial not in the target ring".into(),
                ));
            }
        }
        let mut out = Polynomial::zero(target.clone());
        for (m, c) in &self.terms {
            let mut factor = Polynomial::constant(target.clone(), c.clone());
            for (v, e) in m.iter() {
                let img = images
                    .get(&v)
                    .ok_or_else(|| Error::MissingImage(self.ring.symbol(v).to_string()))?;
                factor = factor.checked_mul(&img.pow(e))?;
            }
            out = out.checked_add(&factor)?;
        }
        Ok(out)
    }

    /// Move this polynomial into another ring that declares (at least) the
    /// same symbol names. Pure renaming; fails if a used symbol is missing.
    pub fn transport(&self, target: &Arc<RingSpec>) -> Result<Polynomial> {
        if same_ring(&self.ring, target) {
            return Ok(self.clone());
        }
        let mut table: BTreeMap<Var, Var> = BTreeMap::new();
        for v in self.vars_used() {
            let name = self.ring.symbol(v);
            let w = target
                .var(name)
                .ok_or_else(|| Error::UnknownSymbol(name.to_string()))?;
            table.insert(v, w);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.map_vars(|v| table[&v]), c.clone()));
        Ok(Polynomial::from_terms(target.clone(), terms))
    }

    /// Evaluate at a full point: one coordinate per ring variable, in
    /// declaration order.
    pub fn eval_full(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.ring.num_vars() {
            return Err(Error::PointLength {
                want: self.ring.num_vars(),
                got: point.len(),
            });
        }
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.iter() {
                let mut p = BigRational::one();
                for _ in 0..e {
                    p *= &point[v.index()];
                }
                t *= p;
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitute constants for a subset of the variables.
    pub fn eval_partial(&self, values: &BTreeMap<Var, BigRational>) -> Polynomial {
        let mut out = Polynomial::zero(self.ring.clone());
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for (v, e) in m.iter() {
                match values.get(&v) {
                    Some(val) => {
                        let mut p = BigRational::one();
                        for _ in 0..e {
                            p *= val;
                        }
                        coeff *= p;
                    }
                    None => rest.push((v, e)),
                }
            }
            out.add_term(Monomial::from_pairs(rest), coeff);
        }
        out
    }

    /// Homogenize with respect to main-variable degree using the variable
    /// `h`, which must not occur in the polynomial.
    pub fn homogenize(&self, h: Var) -> Result<Polynomial> {
        if self.uses_var(h) {
            return Err(Error::Precondition(format!(
                "homogenizing variable `{}` occurs in the polynomial",
                self.ring.symbol(h)
            )));
        }
        let ring = self.ring.clone();
        let d = self
            .terms
            .keys()
            .map(|m| m.degree_where(|v| ring.is_main(v) || v == h))
            .max()
            .unwrap_or(0);
        let terms = self.terms.iter().map(|(m, c)| {
            let w = m.degree_where(|v| ring.is_main(v) || v == h);
            (m.mul(&Monomial::var_pow(h, d - w)), c.clone())
        });
        Ok(Polynomial::from_terms(ring, terms))
    }

    /// Set one variable to 1 (e.g. undo a homogenization).
    pub fn dehomogenize(&self, h: Var) -> Polynomial {
        let mut values = BTreeMap::new();
        values.insert(h, BigRational::one());
        self.eval_partial(&values)
    }

    /// Canonical text form: terms descending under the ring's default order.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let order = self.ring.default_order();
        let mut monomials: Vec<&Monomial> = self.terms.keys().collect();
        monomials.sort_by(|a, b| order.cmp(b, a));
        let mut out = String::new();
        for (i, m) in monomials.iter().enumerate() {
            let c = &self.terms[*m];
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_is_one = abs.is_one();
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if coeff_is_one {
                out.push_str(&m.render(&self.ring));
            } else {
                out.push_str(&abs.to_string());
                out.push('*');
                out.push_str(&m.render(&self.ring));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("ring mismatch")
            }
        }
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$checked(&rhs).expect("ring mismatch")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.negated()
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.negated()
    }
}
