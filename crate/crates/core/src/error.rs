use thiserror::Error;

/// A configured size limit was hit during saturation or enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("capacity cap `{cap}` of {limit} exceeded")]
pub struct CapacityError {
    pub cap: &'static str,
    pub limit: usize,
}

impl CapacityError {
    pub fn new(cap: &'static str, limit: usize) -> Self {
        CapacityError { cap, limit }
    }
}
