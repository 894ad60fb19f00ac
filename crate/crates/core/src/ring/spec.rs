use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::ring::{Monomial, Polynomial, TermOrder};

/// Index of a variable within its [`RingSpec`].
///
/// Variables are numbered parameters first, then main variables, then
/// auxiliary variables, so appending auxiliary variables never invalidates
/// existing indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub u32);

impl Var {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Which block a variable belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarKind {
    Parameter,
    Main,
    Aux,
}

/// A polynomial ring over the rationals with a three-block variable
/// structure: parameters (the base ring), main variables (the fiber
/// coordinates) and auxiliary variables (homogenizers, Laurent inverses,
/// determinant inverses, tag variables).
///
/// Relations such as `t*s - 1` are carried by the ring itself and are
/// appended to every ideal before a Groebner basis is computed in it.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    parameters: Vec<String>,
    main_vars: Vec<String>,
    aux_vars: Vec<String>,
    // Relations stored as raw term data to avoid a reference cycle with
    // Polynomial; retagged on access.
    relations: Vec<Vec<(Monomial, BigRational)>>,
}

impl RingSpec {
    pub fn new<S: Into<String>>(
        parameters: Vec<S>,
        main_vars: Vec<S>,
        aux_vars: Vec<S>,
    ) -> Result<Arc<RingSpec>> {
        let parameters: Vec<String> = parameters.into_iter().map(Into::into).collect();
        let main_vars: Vec<String> = main_vars.into_iter().map(Into::into).collect();
        let aux_vars: Vec<String> = aux_vars.into_iter().map(Into::into).collect();
        let mut seen = BTreeSet::new();
        for name in parameters.iter().chain(&main_vars).chain(&aux_vars) {
            if name.is_empty() {
                return Err(Error::Precondition("empty symbol name".into()));
            }
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateSymbol(name.clone()));
            }
        }
        Ok(Arc::new(RingSpec {
            parameters,
            main_vars,
            aux_vars,
            relations: Vec::new(),
        }))
    }

    /// Ring with main variables only.
    pub fn plain<S: Into<String>>(main_vars: Vec<S>) -> Result<Arc<RingSpec>> {
        Self::new(Vec::new(), main_vars, Vec::new())
    }

    pub fn num_vars(&self) -> usize {
        self.parameters.len() + self.main_vars.len() + self.aux_vars.len()
    }

    pub fn num_parameters(&self) -> usize {
        self.parameters.len()
    }

    pub fn num_main_vars(&self) -> usize {
        self.main_vars.len()
    }

    pub fn num_aux_vars(&self) -> usize {
        self.aux_vars.len()
    }

    pub fn kind(&self, v: Var) -> VarKind {
        let i = v.index();
        if i < self.parameters.len() {
            VarKind::Parameter
        } else if i < self.parameters.len() + self.main_vars.len() {
            VarKind::Main
        } else {
            VarKind::Aux
        }
    }

    pub fn is_main(&self, v: Var) -> bool {
        self.kind(v) == VarKind::Main
    }

    pub fn symbol(&self, v: Var) -> &str {
        let i = v.index();
        let p = self.parameters.len();
        let m = self.main_vars.len();
        if i < p {
            &self.parameters[i]
        } else if i < p + m {
            &self.main_vars[i - p]
        } else {
            &self.aux_vars[i - p - m]
        }
    }

    pub fn var(&self, name: &str) -> Option<Var> {
        let p = self.parameters.len();
        let m = self.main_vars.len();
        if let Some(i) = self.parameters.iter().position(|s| s == name) {
            return Some(Var(i as u32));
        }
        if let Some(i) = self.main_vars.iter().position(|s| s == name) {
            return Some(Var((p + i) as u32));
        }
        self.aux_vars
            .iter()
            .position(|s| s == name)
            .map(|i| Var((p + m + i) as u32))
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> {
        (0..self.num_vars() as u32).map(Var)
    }

    pub fn parameter_vars(&self) -> impl Iterator<Item = Var> {
        (0..self.parameters.len() as u32).map(Var)
    }

    pub fn main_var_ids(&self) -> impl Iterator<Item = Var> + '_ {
        let p = self.parameters.len() as u32;
        (0..self.main_vars.len() as u32).map(move |i| Var(p + i))
    }

    pub fn aux_var_ids(&self) -> impl Iterator<Item = Var> + '_ {
        let base = (self.parameters.len() + self.main_vars.len()) as u32;
        (0..self.aux_vars.len() as u32).map(move |i| Var(base + i))
    }

    pub fn parameter_names(&self) -> &[String] {
        &self.parameters
    }

    pub fn main_var_names(&self) -> &[String] {
        &self.main_vars
    }

    pub fn aux_var_names(&self) -> &[String] {
        &self.aux_vars
    }

    pub fn has_symbol(&self, name: &str) -> bool {
        self.var(name).is_some()
    }

    /// True when both rings declare the same symbols in the same blocks,
    /// ignoring relations.
    pub fn same_symbols(&self, other: &RingSpec) -> bool {
        self.parameters == other.parameters
            && self.main_vars == other.main_vars
            && self.aux_vars == other.aux_vars
    }

    pub fn relations(self: &Arc<Self>) -> Vec<Polynomial> {
        self.relations
            .iter()
            .map(|terms| Polynomial::from_raw_terms(self.clone(), terms.clone()))
            .collect()
    }

    pub fn has_relations(&self) -> bool {
        !self.relations.is_empty()
    }

    /// A copy of this ring carrying the given relations (appended to any
    /// existing ones). The relation polynomials must live over a ring with
    /// the same symbol layout.
    pub fn with_relations(self: &Arc<Self>, rels: Vec<Polynomial>) -> Result<Arc<RingSpec>> {
        let mut relations = self.relations.clone();
        for r in rels {
            if !r.ring().same_symbols(self) {
                return Err(Error::RingMismatch(
                    "relation declared over a different ring".into(),
                ));
            }
            if r.is_zero() {
                continue;
            }
            relations.push(r.raw_terms());
        }
        Ok(Arc::new(RingSpec {
            parameters: self.parameters.clone(),
            main_vars: self.main_vars.clone(),
            aux_vars: self.aux_vars.clone(),
            relations,
        }))
    }

    /// Same ring with extra auxiliary variables appended. Existing variable
    /// indices (and therefore relation data) remain valid.
    pub fn with_appended_aux(self: &Arc<Self>, names: &[String]) -> Result<Arc<RingSpec>> {
        let mut aux = self.aux_vars.clone();
        for n in names {
            if self.has_symbol(n) || aux.iter().any(|a| a == n) {
                return Err(Error::DuplicateSymbol(n.clone()));
            }
            aux.push(n.clone());
        }
        Ok(Arc::new(RingSpec {
            parameters: self.parameters.clone(),
            main_vars: self.main_vars.clone(),
            aux_vars: aux,
            relations: self.relations.clone(),
        }))
    }

    /// The base ring of a family: parameters and auxiliary variables with the
    /// main block dropped. Fails when a relation mentions a main variable.
    pub fn parameter_subring(self: &Arc<Self>) -> Result<Arc<RingSpec>> {
        let sub = RingSpec::new(
            self.parameters.clone(),
            Vec::new(),
            self.aux_vars.clone(),
        )?;
        let mut rels = Vec::new();
        for r in self.relations() {
            rels.push(r.transport(&sub).map_err(|_| {
                Error::Precondition(
                    "ring relation mentions a main variable; no parameter subring".into(),
                )
            })?);
        }
        sub.with_relations(rels)
    }

    /// A fresh symbol built from `base` that does not collide with any
    /// declared symbol.
    pub fn fresh_symbol(&self, base: &str) -> String {
        if !self.has_symbol(base) {
            return base.to_string();
        }
        for i in 1.. {
            let cand = format!("{base}{i}");
            if !self.has_symbol(&cand) {
                return cand;
            }
        }
        unreachable!()
    }

    /// Grevlex over all variables in declaration order; used for canonical
    /// serialization and as the default computation order.
    pub fn default_order(&self) -> TermOrder {
        TermOrder::grevlex(self.vars().collect())
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Q[{}][{}]",
            self.parameters.join(","),
            self.main_vars
                .iter()
                .chain(&self.aux_vars)
                .cloned()
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Shared-ring check used by all binary polynomial/ideal operations.
pub fn same_ring(a: &Arc<RingSpec>, b: &Arc<RingSpec>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
