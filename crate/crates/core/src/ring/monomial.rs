use std::fmt;

use crate::ring::{RingSpec, Var};

/// A sparse power product. Exponents are kept sorted by variable index and
/// never zero. The derived `Ord` is structural (it makes monomials usable as
/// map keys); it is *not* a term order — see [`crate::ring::TermOrder`].
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: Var) -> Self {
        Monomial { exps: vec![(v, 1)] }
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial { exps: vec![(v, e)] }
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut exps: Vec<(Var, u32)> = Vec::new();
        for (v, e) in pairs {
            if e == 0 {
                continue;
            }
            match exps.iter_mut().find(|(w, _)| *w == v) {
                Some((_, old)) => *old += e,
                None => exps.push((v, e)),
            }
        }
        exps.sort_by_key(|(v, _)| *v);
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.exps
            .iter()
            .find(|(w, _)| *w == v)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.exps.iter().map(|(v, _)| *v)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|(_, e)| e).sum()
    }

    pub fn degree_where(&self, mut pred: impl FnMut(Var) -> bool) -> u32 {
        self.exps
            .iter()
            .filter(|(v, _)| pred(*v))
            .map(|(_, e)| e)
            .sum()
    }

    /// Sub-monomial on the variables selected by `pred`.
    pub fn restrict(&self, mut pred: impl FnMut(Var) -> bool) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .copied()
                .filter(|(v, _)| pred(*v))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (va, ea) = self.exps[i];
            let (vb, eb) = other.exps[j];
            match va.cmp(&vb) {
                std::cmp::Ordering::Less => {
                    exps.push((va, ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    exps.push((vb, eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    exps.push((va, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial { exps }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: self.exps.iter().map(|(v, e)| (*v, e * k)).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .all(|(v, e)| other.exponent(*v) >= *e)
    }

    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut exps = Vec::with_capacity(self.exps.len());
        for (v, e) in &self.exps {
            let d = e - other.exponent(*v);
            if d > 0 {
                exps.push((*v, d));
            }
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps: Vec<(Var, u32)> = self.exps.clone();
        for (v, e) in &other.exps {
            match exps.iter_mut().find(|(w, _)| w == v) {
                Some((_, old)) => *old = (*old).max(*e),
                None => exps.push((*v, *e)),
            }
        }
        exps.sort_by_key(|(v, _)| *v);
        Monomial { exps }
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|(v, _)| other.exponent(*v) == 0)
    }

    /// Rename variables; used when moving between rings with shared symbols.
    pub fn map_vars(&self, mut f: impl FnMut(Var) -> Var) -> Monomial {
        Monomial::from_pairs(self.exps.iter().map(|(v, e)| (f(*v), *e)))
    }

    pub fn render(&self, ring: &RingSpec) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (v, e) in &self.exps {
            if *e == 1 {
                parts.push(ring.symbol(*v).to_string());
            } else {
                parts.push(format!("{}^{}", ring.symbol(*v), e));
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|(v, e)| {
                if *e == 1 {
                    format!("v{}", v.0)
                } else {
                    format!("v{}^{}", v.0, e)
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}
