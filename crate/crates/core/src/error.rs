use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("invalid semidirect action: {0}")]
    InvalidAction(String),
    #[error("declared relation `{0}` is not the identity")]
    RelationViolated(String),
    #[error("group order {order} exceeds the configured cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),
    #[error("unknown generator label `{0}`")]
    UnknownLabel(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("group is not solvable")]
    NotSolvable,
    #[error("subgroup is not a p-group")]
    NotPGroup,
    #[error("no Sylow system found for a solvable group")]
    SystemNotFound,
    #[error("unknown relation `{0}`")]
    UnknownRelation(String),
    #[error("element set is not a subgroup")]
    NotASubgroup,
}

pub type Result<T> = std::result::Result<T, GroupError>;
