use peaklab_algebra::AlgebraError;
use peaklab_order::OrderError;
use peaklab_perm::PermError;
use peaklab_poset::PosetError;
use peaklab_qsym::QsymError;
use thiserror::Error;

/// Failure of a command before any verdict was reached.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad input: exit status 2.
    #[error("{0}")]
    Usage(String),
    /// A size guard or cap was hit: exit status 3.
    #[error("resource limit: {0}")]
    Resource(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Resource(_) => 3,
        }
    }
}

fn perm_is_resource(e: &PermError) -> bool {
    matches!(e, PermError::Guard { .. })
}

fn poset_is_resource(e: &PosetError) -> bool {
    matches!(e, PosetError::Guard { .. })
}

fn order_is_resource(e: &OrderError) -> bool {
    match e {
        OrderError::Perm(p) => perm_is_resource(p),
        OrderError::Poset(p) => poset_is_resource(p),
        _ => false,
    }
}

fn algebra_is_resource(e: &AlgebraError) -> bool {
    match e {
        AlgebraError::CapExceeded { .. } => true,
        AlgebraError::Perm(p) => perm_is_resource(p),
        AlgebraError::Order(o) => order_is_resource(o),
        _ => false,
    }
}

fn qsym_is_resource(e: &QsymError) -> bool {
    match e {
        QsymError::Guard { .. } => true,
        QsymError::Algebra(a) => algebra_is_resource(a),
        QsymError::Order(o) => order_is_resource(o),
        QsymError::Poset(p) => poset_is_resource(p),
        QsymError::Perm(p) => perm_is_resource(p),
        _ => false,
    }
}

fn classify(resource: bool, msg: String) -> CliError {
    if resource {
        CliError::Resource(msg)
    } else {
        CliError::Usage(msg)
    }
}

impl From<PermError> for CliError {
    fn from(e: PermError) -> Self {
        classify(perm_is_resource(&e), e.to_string())
    }
}

impl From<OrderError> for CliError {
    fn from(e: OrderError) -> Self {
        classify(order_is_resource(&e), e.to_string())
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        classify(algebra_is_resource(&e), e.to_string())
    }
}

impl From<QsymError> for CliError {
    fn from(e: QsymError) -> Self {
        classify(qsym_is_resource(&e), e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use peaklab_perm::GroupKind;

    #[test]
    fn guards_map_to_resource() {
        let g = PermError::Guard { group: GroupKind::Symmetric, n: 9, limit: 8 };
        assert_eq!(CliError::from(g.clone()).exit_code(), 3);
        assert_eq!(CliError::from(AlgebraError::Perm(g.clone())).exit_code(), 3);
        assert_eq!(CliError::from(QsymError::Algebra(AlgebraError::Perm(g))).exit_code(), 3);
        assert_eq!(CliError::from(AlgebraError::CapExceeded { cap: 4 }).exit_code(), 3);
        assert_eq!(CliError::from(PermError::Parse("x".into())).exit_code(), 2);
        assert_eq!(CliError::from(OrderError::UnknownKind("x".into())).exit_code(), 2);
    }
}
