use thiserror::Error;

/// Errors produced by constructors, verifiers and the planner.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground-set size {0} outside supported range 1..=64")]
    GroundSize(u32),
    #[error("family members must have cardinality {expected}, found {found}")]
    BadFamily { expected: u32, found: u32 },
    #[error("shadow of a family with cardinality 0 is undefined")]
    EmptyCardinality,
    #[error("shade of a family at full cardinality n = {0} is undefined")]
    FullCardinality(u32),
    #[error("count {t} out of range 0..={max}")]
    CountOutOfRange { t: u64, max: u64 },
    #[error("0 has no cascade representation")]
    ZeroHasNoCascade,
    #[error("edge {{{0},{1}}} lies in no triangle")]
    NotTGraph(u32, u32),
    #[error("starter index {i} out of range 0..={max} for n = {n}")]
    StarterIndexOutOfRange { n: u32, i: u64, max: u64 },
    #[error("cannot delete {t} edges at vertex {n}; at most n-3 allowed")]
    TooManyDeletions { n: u32, t: u32 },
    #[error("size {m} outside the top-row range [{lo},{hi}] for n = {n}")]
    OutOfTopRow { n: u32, m: u64, lo: u64, hi: u64 },
    #[error("size {m} outside the base interval [{lo},{hi}] for n = {n}")]
    OutOfBaseInterval { n: u32, m: u64, lo: u64, hi: u64 },
    #[error("level {l} out of range for n = {n}")]
    LevelRange { n: u32, l: u32 },
    #[error("ground sizes differ: {0} vs {1}")]
    GroundMismatch(u32, u32),
    #[error("core cardinality {l} must be below the core ground size {t}")]
    BadCore { t: u32, l: u32 },
    #[error("invalid star plan: {0}")]
    BadPlan(String),
    #[error("size {m} not reachable by the star construction for (n,l,t) = ({n},{l},{t})")]
    OutOfSmallRange { n: u32, l: u32, t: u32, m: u64 },
    #[error("size {m} outside the level-{l} interval [{lo},{hi}] for n = {n}")]
    OutOfLargeRange { n: u32, l: u32, m: u64, lo: u64, hi: u64 },
    #[error("size {m} not coverable on levels ({l},{}) for n = {n}", l + 1)]
    OutOfLevelRange { n: u32, l: u32, m: u64 },
    #[error(
        "size {m} outside the constructible range [{lo},{hi}] for n = {n}; \
         nearest achievable sizes: {} below, {} above",
        nearest_below.map_or("none".into(), |v| v.to_string()),
        nearest_above.map_or("none".into(), |v| v.to_string())
    )]
    OutOfTheoremRange {
        n: u32,
        m: u64,
        lo: u64,
        hi: u64,
        nearest_below: Option<u64>,
        nearest_above: Option<u64>,
    },
    #[error("parameter t = {t} out of range 2..={n}")]
    BadT { n: u32, t: u32 },
    #[error("size {m} out of range 1..={max}")]
    SizeRange { m: u64, max: u64 },
    #[error("size {m} not in the near-top window ({lo},{hi}) for (n,l) = ({n},{l})")]
    NotNearTop { n: u32, l: u32, m: u64, lo: u64, hi: u64 },
    #[error("search space 2^{0} too large for exhaustive enumeration")]
    SearchTooLarge(u64),
    #[error("constructed antichain failed verification: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
