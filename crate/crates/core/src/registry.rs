//! Chow polynomial methods behind a common trait, selectable by name.

use crate::building::{g_min, BuiltMatroid};
use crate::deletion::chow_by_deletion;
use crate::error::Result;
use crate::fy::chow_polynomial;
use crate::poly::Polynomial;
use crate::stellar::chow_by_filtration;
use crate::toric::toric_hilbert_oracle;

pub trait ChowMethod: Send + Sync {
    fn name(&self) -> &'static str;
    fn compute(&self, bm: &BuiltMatroid) -> Result<Polynomial>;
}

/// Counts FY monomials.
pub struct Fy;

/// Deletes the ⊴-largest element recursively.
pub struct Deletion;

/// Follows a binary filtration up from the minimal building set.
pub struct Filtration;

/// Hilbert function of the toric presentation, for small instances.
pub struct Oracle {
    pub max_rank: usize,
}

impl ChowMethod for Fy {
    fn name(&self) -> &'static str {
        "fy"
    }
    fn compute(&self, bm: &BuiltMatroid) -> Result<Polynomial> {
        Ok(chow_polynomial(bm))
    }
}

impl ChowMethod for Deletion {
    fn name(&self) -> &'static str {
        "deletion"
    }
    fn compute(&self, bm: &BuiltMatroid) -> Result<Polynomial> {
        chow_by_deletion(bm)
    }
}

impl ChowMethod for Filtration {
    fn name(&self) -> &'static str {
        "filtration"
    }
    fn compute(&self, bm: &BuiltMatroid) -> Result<Polynomial> {
        chow_by_filtration(bm, &g_min(bm.lattice()))
    }
}

impl ChowMethod for Oracle {
    fn name(&self) -> &'static str {
        "oracle"
    }
    fn compute(&self, bm: &BuiltMatroid) -> Result<Polynomial> {
        toric_hilbert_oracle(bm, self.max_rank)
    }
}

pub struct MethodRegistry {
    methods: Vec<Box<dyn ChowMethod>>,
}

impl MethodRegistry {
    pub fn empty() -> MethodRegistry {
        MethodRegistry { methods: Vec::new() }
    }

    /// fy, deletion, filtration and oracle, in that order.
    pub fn standard() -> MethodRegistry {
        let mut r = MethodRegistry::empty();
        r.register(Box::new(Fy));
        r.register(Box::new(Deletion));
        r.register(Box::new(Filtration));
        r.register(Box::new(Oracle { max_rank: 5 }));
        r
    }

    pub fn register(&mut self, m: Box<dyn ChowMethod>) {
        self.methods.retain(|x| x.name() != m.name());
        self.methods.push(m);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.methods.iter().map(|m| m.name()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&dyn ChowMethod> {
        self.methods.iter().find(|m| m.name() == name).map(|m| m.as_ref())
    }

    pub fn run_all(&self, bm: &BuiltMatroid) -> Vec<(&'static str, Result<Polynomial>)> {
        self.methods.iter().map(|m| (m.name(), m.compute(bm))).collect()
    }
}

/// Whether every method that succeeded produced the same polynomial.
pub fn methods_agree(results: &[(&'static str, Result<Polynomial>)]) -> bool {
    let mut ok = results.iter().filter_map(|(_, r)| r.as_ref().ok());
    match ok.next() {
        Some(first) => ok.all(|p| p == first),
        None => true,
    }
}
