use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} has no square root in Q(sqrt2, sqrt3)")]
    NotRepresentable(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("closure exceeded {0} elements")]
    OrderExceeded(usize),
    #[error("generators mix matrices and permutations, or have different sizes")]
    MixedKind,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("element index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("group order {order} exceeds the bound {bound}")]
    BoundExceeded { order: usize, bound: usize },
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("matrix is singular")]
    Singular,
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("representation `{0}` is not a homomorphism")]
    NotHomomorphism(String),
    #[error("trace is not constant on conjugacy class {0}")]
    TraceNotClassConstant(usize),
    #[error("representations belong to different groups")]
    GroupMismatch,
    #[error("character value of class {class} needs roots of unity of order {order}, outside Q(sqrt2, sqrt3)")]
    LiftFailure { class: usize, order: usize },
    #[error("character table construction failed: {0}")]
    CharacterTable(String),
    #[error("multiplicity of irrep {0} is not a nonnegative integer")]
    NonIntegerMultiplicity(usize),
    #[error("irrep {0} cannot be realised over Q(sqrt2, sqrt3)")]
    FieldExceeded(usize),
    #[error("defining representation is not faithful")]
    NotFaithful,
    #[error("irreps do not exhaust the group: sum of squared dimensions {found} != {order}")]
    IncompleteIrrepSet { found: usize, order: usize },
    #[error("no seed produced a nonsingular transform")]
    SingularTransform,
    #[error("seed polynomial has no component in irrep {0}")]
    SeedHasNoComponent(String),
    #[error("unknown irrep `{0}`")]
    UnknownIrrep(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
}
