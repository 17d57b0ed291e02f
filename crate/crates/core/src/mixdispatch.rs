//! Chain-search dispatch: find the outermost layer whose kind provides a
//! capability, then execute it there.
//!
//! Resolution is a linear scan from the outermost layer inward, so when two
//! layers provide the same capability the outermost one wins, and the cost of
//! reaching a capability grows with the depth of the layer providing it.
//! Execution happens on exactly one layer, with that layer's own state and
//! its own base as context; there is no chaining from one provider to the
//! next. The scan consults the live [`CapabilityTable`], so a capability
//! registered after a chain was built resolves on that chain at the next
//! call.

use crate::capability::CapabilityTable;
use crate::component::{Component, DecorationLayer};
use crate::error::Error;
use crate::value::Value;

/// Where a capability request landed: the providing layer and its depth from
/// the outside (the outermost layer is depth 0).
#[derive(Debug)]
pub struct ResolvedTarget<'a> {
    pub layer: &'a DecorationLayer,
    pub depth: usize,
}

/// Find the outermost provider of `capability`. Never mutates the chain; an
/// unregistered capability is indistinguishable from an unprovided one.
pub fn resolve<'a>(
    chain: &'a Component,
    capability: &str,
    table: &CapabilityTable,
) -> Result<ResolvedTarget<'a>, Error> {
    let mut current = chain;
    let mut depth = 0;
    loop {
        match current {
            Component::Layer(layer) => {
                if layer.supports(capability, table) {
                    return Ok(ResolvedTarget { layer, depth });
                }
                current = layer.base();
                depth += 1;
            }
            Component::Concrete(_) => {
                return Err(Error::unsupported(capability, chain.describe_chain()))
            }
        }
    }
}

/// Resolve and execute in one step, on the resolved layer's own state and
/// base. Arguments are checked against the registered signature first.
pub fn invoke(
    chain: &mut Component,
    capability: &str,
    args: &[Value],
    table: &CapabilityTable,
) -> Result<Value, Error> {
    if table.signature(capability).is_some() {
        table.check_args(capability, args)?;
    }
    match execute_on_outermost_provider(chain, capability, args, table) {
        Some(result) => result,
        None => Err(Error::unsupported(capability, chain.describe_chain())),
    }
}

fn execute_on_outermost_provider(
    chain: &mut Component,
    capability: &str,
    args: &[Value],
    table: &CapabilityTable,
) -> Option<Result<Value, Error>> {
    match chain {
        Component::Layer(layer) => {
            if layer.supports(capability, table) {
                Some(layer.execute(capability, args))
            } else {
                execute_on_outermost_provider(layer.base_mut(), capability, args, table)
            }
        }
        Component::Concrete(_) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::capability::register_capability;
    use crate::synthetic::{self, EventLog};
    use crate::value::{Signature, ValueKind};

    fn chain_of(kinds: &[&str], registry: &crate::LayerRegistry, log: &EventLog) -> Component {
        let mut chain = synthetic::component(log);
        for kind in kinds.iter().rev() {
            chain = registry.wrap(chain, kind, &[]).unwrap().into();
        }
        chain
    }

    #[test]
    fn resolution_scans_outermost_to_innermost() {
        let log = EventLog::new();
        let registry = synthetic::registry(&log);
        let chain = chain_of(&["D1", "D2", "D3"], &registry, &log);

        let target = resolve(&chain, "f2", registry.table()).unwrap();
        assert_eq!(target.depth, 1);
        assert_eq!(target.layer.kind(), "D2");
        assert_eq!(resolve(&chain, "f1", registry.table()).unwrap().depth, 0);
        assert_eq!(resolve(&chain, "f3", registry.table()).unwrap().depth, 2);
    }

    #[test]
    fn the_outermost_of_two_providers_wins() {
        let log = EventLog::new();
        let mut registry = synthetic::registry(&log);
        register_capability(
            registry.table_mut(),
            synthetic::f4_capability(),
            &["D4", "D4prime"],
        )
        .unwrap();
        let chain = chain_of(&["D4", "D4prime"], &registry, &log);

        let target = resolve(&chain, "f4", registry.table()).unwrap();
        assert_eq!(target.depth, 0);
        assert_eq!(target.layer.kind(), "D4");
    }

    #[test]
    fn a_missing_capability_reports_the_whole_chain() {
        let log = EventLog::new();
        let registry = synthetic::registry(&log);
        let chain = chain_of(&["D1"], &registry, &log);

        let err = resolve(&chain, "f2", registry.table()).unwrap_err();
        match err {
            Error::Unsupported { capability, chain } => {
                assert_eq!(capability, "f2");
                assert_eq!(chain, vec!["D1", "Concrete"]);
            }
            other => panic!("expected Unsupported, got {other:?}"),
        }
    }

    #[test]
    fn a_bare_concrete_component_supports_nothing() {
        let log = EventLog::new();
        let registry = synthetic::registry(&log);
        let mut chain = synthetic::component(&log);
        let err = invoke(&mut chain, "f1", &[], registry.table()).unwrap_err();
        assert!(err.is_unsupported());
    }

    #[test]
    fn invoke_executes_on_the_resolved_layer_only() {
        let log = EventLog::new();
        let registry = synthetic::registry(&log);
        let mut chain = chain_of(&["D1", "D2", "D3"], &registry, &log);

        let value = invoke(&mut chain, "f3", &[], registry.table()).unwrap();
        let pairs = log.pairs();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0], ("D3".to_string(), "f3".to_string()));
        match value {
            Value::Text(tag) => assert!(tag.starts_with("f3:D3#"), "unexpected tag {tag}"),
            other => panic!("expected text, got {other:?}"),
        }
    }

    #[test]
    fn resolution_before_registration_fails_and_succeeds_after() {
        let log = EventLog::new();
        let mut registry = synthetic::registry(&log);
        let chain = chain_of(&["D3", "D4"], &registry, &log);

        assert!(resolve(&chain, "f4", registry.table())
            .unwrap_err()
            .is_unsupported());

        register_capability(registry.table_mut(), synthetic::f4_capability(), &["D4"]).unwrap();
        assert_eq!(resolve(&chain, "f4", registry.table()).unwrap().depth, 1);
    }

    #[test]
    fn resolve_never_mutates_the_chain() {
        let log = EventLog::new();
        let registry = synthetic::registry(&log);
        let chain = chain_of(&["D1", "D2"], &registry, &log);
        let before = chain.describe_chain();
        let _ = resolve(&chain, "f2", registry.table()).unwrap();
        let _ = resolve(&chain, "f3", registry.table());
        assert_eq!(chain.describe_chain(), before);
        assert!(log.is_empty());
    }

    #[test]
    fn arguments_are_checked_against_the_signature() {
        let log = EventLog::new();
        let mut registry = synthetic::registry(&log);
        register_capability(
            registry.table_mut(),
            crate::CapabilityId::new(
                "poke",
                Signature::new(vec![ValueKind::Char], ValueKind::Unit),
            ),
            &["D1"],
        )
        .unwrap();
        let mut chain = chain_of(&["D1"], &registry, &log);

        let err = invoke(&mut chain, "poke", &[Value::Count(7)], registry.table()).unwrap_err();
        assert!(matches!(err, Error::SignatureMismatch { .. }));
        let err = invoke(&mut chain, "f1", &[Value::Char('x')], registry.table()).unwrap_err();
        assert!(matches!(err, Error::SignatureMismatch { .. }));
    }
}
