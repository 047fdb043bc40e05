//! JSON instance descriptions. Ground elements are 0-based indices and flats
//! are arrays of indices.

use builtmat::building::{g_max, g_min};
use builtmat::families::{augmented_built_matroid, chordal_building_sets, make_boolean, make_graphic, make_partition, make_uniform};
use builtmat::{BuiltMatroid, Error, Flat, GroundSet, Matroid};
use serde::Deserialize;

#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum MatroidSpec {
    Uniform { r: usize, n: usize },
    Boolean { n: usize },
    Graphic { vertices: usize, edges: Vec<(usize, usize)> },
    Partition { n: usize },
    Flats { n: usize, flats: Vec<Vec<usize>> },
    /// `ranks[s]` is the rank of the subset with bitmask `s`.
    RankTable { n: usize, ranks: Vec<u32> },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum BuildingSpec {
    Min,
    Max,
    Explicit(Vec<Vec<usize>>),
    /// The free coextension with its augmented building set.
    Augmented,
    /// Index into the chordal building sets of a Boolean matroid.
    Chordal(usize),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceSpec {
    pub matroid: MatroidSpec,
    #[serde(default = "default_building")]
    pub building_set: BuildingSpec,
    #[serde(default)]
    pub order: Option<Vec<usize>>,
    /// Modular cut, used by `check modular-cut`.
    #[serde(default)]
    pub cut: Option<Vec<Vec<usize>>>,
}

fn default_building() -> BuildingSpec {
    BuildingSpec::Min
}

/// An input error with the part of the spec it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecError {
    pub location: &'static str,
    pub message: String,
}

impl std::fmt::Display for SpecError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

fn at(location: &'static str) -> impl Fn(Error) -> SpecError {
    move |e| SpecError { location, message: e.to_string() }
}

pub fn parse(text: &str) -> Result<InstanceSpec, SpecError> {
    serde_json::from_str(text).map_err(|e| SpecError { location: "json", message: e.to_string() })
}

pub fn flat_of(n: usize, v: &[usize]) -> Result<Flat, SpecError> {
    if let Some(&e) = v.iter().find(|&&e| e >= n) {
        return Err(SpecError { location: "flat", message: format!("element {e} is outside the ground set of size {n}") });
    }
    Ok(Flat::from_elements(v.iter().copied()))
}

pub fn flat_json(f: Flat) -> Vec<usize> {
    f.to_vec()
}

pub fn build_matroid(m: &MatroidSpec) -> Result<Matroid, SpecError> {
    let loc = at("matroid");
    match m {
        MatroidSpec::Uniform { r, n } => make_uniform(*r, *n).map_err(loc),
        MatroidSpec::Boolean { n } => {
            if *n == 0 || *n > 16 {
                return Err(SpecError { location: "matroid", message: format!("boolean matroid of size {n} is out of range") });
            }
            Ok(make_boolean(*n))
        }
        MatroidSpec::Graphic { vertices, edges } => make_graphic(*vertices, edges).map_err(loc),
        MatroidSpec::Partition { n } => make_partition(*n).map_err(loc),
        MatroidSpec::Flats { n, flats } => {
            let fl = flats.iter().map(|v| flat_of(*n, v)).collect::<Result<Vec<_>, _>>()?;
            Matroid::from_flats(*n, &fl).map_err(loc)
        }
        MatroidSpec::RankTable { n, ranks } => Matroid::from_rank_table(*n, ranks).map_err(loc),
    }
}

fn order_of(spec: &InstanceSpec, n: usize) -> Result<GroundSet, SpecError> {
    match &spec.order {
        None => Ok(GroundSet::natural(n)),
        Some(o) => {
            if o.len() != n {
                return Err(SpecError { location: "order", message: format!("expected a permutation of 0..{n}") });
            }
            GroundSet::from_sequence(o.clone()).map_err(at("order"))
        }
    }
}

/// The matroid and the requested building-set flats, before validation.
pub fn raw_parts(spec: &InstanceSpec) -> Result<(Matroid, Vec<Flat>), SpecError> {
    let m = build_matroid(&spec.matroid)?;
    let l = m.lattice();
    let flats = match &spec.building_set {
        BuildingSpec::Min => g_min(l).elements().to_vec(),
        BuildingSpec::Max => g_max(l).elements().to_vec(),
        BuildingSpec::Explicit(v) => v.iter().map(|f| flat_of(m.n(), f)).collect::<Result<_, _>>()?,
        BuildingSpec::Augmented => {
            let bm = augmented_built_matroid(&m).map_err(at("building_set"))?;
            return Ok((bm.matroid().clone(), bm.bset().elements().to_vec()));
        }
        BuildingSpec::Chordal(k) => {
            let MatroidSpec::Boolean { n } = spec.matroid else {
                return Err(SpecError { location: "building_set", message: "chordal building sets need a boolean matroid".into() });
            };
            let sets = chordal_building_sets(n).map_err(at("building_set"))?;
            let Some(s) = sets.get(*k) else {
                return Err(SpecError { location: "building_set", message: format!("chordal index {k} out of range (have {})", sets.len()) });
            };
            s.elements().to_vec()
        }
    };
    Ok((m, flats))
}

/// The fully validated built matroid.
pub fn build(spec: &InstanceSpec) -> Result<BuiltMatroid, SpecError> {
    let (m, flats) = raw_parts(spec)?;
    let order = order_of(spec, m.n())?;
    BuiltMatroid::new(m, &flats, order).map_err(at("building_set"))
}
