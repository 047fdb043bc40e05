use crate::flat::Flat;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("{0} is not a flat")]
    NotAFlat(Flat),
    #[error("the bottom flat cannot belong to a building set")]
    ContainsBottom,
    #[error("modular cut is not upward closed: {0} is in the cut but {1} is not")]
    NotUpwardClosed(Flat, Flat),
    #[error("modular cut is not closed under meets of modular pairs: {0} and {1}")]
    NotMeetClosed(Flat, Flat),
    #[error("irreducible flat {0} is missing from the building set")]
    MissingIrreducible(Flat),
    #[error("{0} and {1} meet nontrivially but their join is not in the building set")]
    JoinClosureViolation(Flat, Flat),
    #[error("building set fails the product decomposition at {0}")]
    StructuralMismatch(Flat),
    #[error("modular cut is not compatible with the building set: minimal flat {0} is missing")]
    NotGCompatible(Flat),
    #[error("modular cut must be proper and nonempty")]
    ImproperCut,
    #[error("modular cut contains the atom {0}")]
    CutContainsAtom(Flat),
    #[error("{0} is in the larger set but not in the smaller one")]
    NotContained(Flat),
    #[error("the target building set is not flag")]
    NotFlag,
    #[error("greedy filtration stuck at a building set of size {0}")]
    Stuck(usize),
    #[error("{0} does not have a unique new factor over {1}")]
    NotUnique(Flat, Flat),
    #[error("local nested set at {0} is not nested in its local interval")]
    NotNestedLocal(Flat),
    #[error("not a nested set")]
    NotNested,
    #[error("local interval at {0} has rank {1}, expected 1")]
    RankNotOne(Flat, usize),
    #[error("nested set is not maximal")]
    NotMaximal,
    #[error("the built matroid is reducible")]
    NotIrreducible,
    #[error("the built matroid is not complete for its order")]
    NotComplete,
    #[error("chain element {1} over {0} leaves the local building set")]
    ChainLeavesBuildingSet(Flat, Flat),
    #[error("filtration step adding {0} has one maximal and one non-maximal factor")]
    MixedFactorStep(Flat),
    #[error("no binary filtration from the base building set")]
    NoBinaryFiltration,
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("polynomial is not palindromic")]
    NotPalindromic,
    #[error("fiber over {0:?} does not match its descent count")]
    FiberMismatch(Vec<Flat>),
    #[error("matroid is not simple")]
    NotSimple,
}
