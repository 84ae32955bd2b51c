use thiserror::Error;

/// Errors produced by the beam model.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A scalar argument is outside the range where the model is defined.
    #[error("{name} = {value} is outside its valid domain ({expected})")]
    Domain {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    /// The requested mesh/load combination cannot be built.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// The reduced stiffness matrix lost positive definiteness while factoring.
    #[error("reduced stiffness is not positive definite at DOF {dof} (node {node}, {component}); check boundary conditions")]
    Singular {
        dof: usize,
        node: usize,
        component: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(name: &'static str, value: f64, expected: &'static str) -> Error {
    Error::Domain {
        name,
        value,
        expected,
    }
}
