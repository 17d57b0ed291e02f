//! Structural laws of the chain model and the two dynamic engines, checked
//! against generated chains of the instrumented synthetic kinds.

mod support;

use garnish_core::synthetic::{self, EventLog, D1, D2, D3, D4, D4PRIME, F1, F2, F3, F4, PLAIN};
use garnish_core::{d2dispatch, mixdispatch, register_capability, Component, Value};
use proptest::prelude::*;

fn any_kind() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec![D1, D2, D3, D4, D4PRIME, PLAIN])
}

fn kind_stack() -> impl Strategy<Value = Vec<&'static str>> {
    prop::collection::vec(any_kind(), 0..8)
}

fn registered_capability() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec![F1, F2, F3])
}

/// The single kind the synthetic registry assigns each capability to.
fn provider_of(capability: &str) -> &'static str {
    match capability {
        "f1" => D1,
        "f2" => D2,
        "f3" => D3,
        other => panic!("no registered provider for {other}"),
    }
}

fn build(kinds_outermost_first: &[&str], log: &EventLog) -> Component {
    let registry = synthetic::registry(log);
    let mut chain = synthetic::component(log);
    for kind in kinds_outermost_first.iter().rev() {
        chain = registry.wrap(chain, kind, &[]).unwrap().into();
    }
    chain
}

proptest! {
    #[test]
    fn wrapping_prepends_one_kind_and_one_level(kinds in kind_stack(), outer in any_kind()) {
        let log = EventLog::new();
        let registry = synthetic::registry(&log);
        let base = build(&kinds, &log);
        let mut expected = vec![outer.to_string()];
        expected.extend(base.describe_chain());
        let depth_before = base.depth();

        let wrapped: Component = registry.wrap(base, outer, &[]).unwrap().into();
        prop_assert_eq!(wrapped.describe_chain(), expected);
        prop_assert_eq!(wrapped.depth(), depth_before + 1);
    }

    #[test]
    fn peeling_a_fresh_layer_returns_the_identical_base(kinds in kind_stack(), outer in any_kind()) {
        let log = EventLog::new();
        let registry = synthetic::registry(&log);
        let base = build(&kinds, &log);
        let before = support::chain_addr(&base);
        let description = base.describe_chain();

        let peeled = registry.wrap(base, outer, &[]).unwrap().into_base();
        prop_assert_eq!(support::chain_addr(&peeled), before);
        prop_assert_eq!(peeled.describe_chain(), description);
    }

    #[test]
    fn operation_visits_every_level_exactly_once_outermost_first(kinds in kind_stack()) {
        let log = EventLog::new();
        let mut chain = build(&kinds, &log);
        chain.operation().unwrap();

        let mut expected: Vec<(String, String)> = kinds
            .iter()
            .map(|kind| (kind.to_string(), "operation".to_string()))
            .collect();
        expected.push(("Concrete".to_string(), "operation".to_string()));
        prop_assert_eq!(log.pairs(), expected);
    }

    #[test]
    fn resolve_matches_a_linear_scan_oracle(kinds in kind_stack(), capability in registered_capability()) {
        let log = EventLog::new();
        let registry = synthetic::registry(&log);
        let chain = build(&kinds, &log);

        let expected = kinds.iter().position(|kind| *kind == provider_of(capability));
        match mixdispatch::resolve(&chain, capability, registry.table()) {
            Ok(target) => {
                prop_assert_eq!(Some(target.depth), expected);
                prop_assert_eq!(target.layer.kind(), provider_of(capability));
            }
            Err(error) => {
                prop_assert!(expected.is_none(), "resolve failed with a provider present: {error}");
                prop_assert!(error.is_unsupported());
            }
        }
    }

    #[test]
    fn resolve_leaves_no_trace(kinds in kind_stack(), capability in registered_capability()) {
        let log = EventLog::new();
        let registry = synthetic::registry(&log);
        let chain = build(&kinds, &log);
        log.clear();

        let _ = mixdispatch::resolve(&chain, capability, registry.table());
        prop_assert!(log.is_empty());
    }

    #[test]
    fn invoke_runs_exactly_one_capability_event_on_the_outermost_provider(
        kinds in kind_stack(),
        capability in registered_capability(),
    ) {
        prop_assume!(kinds.contains(&provider_of(capability)));
        let log = EventLog::new();
        let registry = synthetic::registry(&log);
        let mut chain = build(&kinds, &log);
        log.clear();

        let value = mixdispatch::invoke(&mut chain, capability, &[], registry.table()).unwrap();
        let pairs = log.pairs();
        prop_assert_eq!(
            pairs,
            vec![(provider_of(capability).to_string(), capability.to_string())]
        );
        let tag = match value {
            Value::Text(tag) => tag,
            other => {
                return Err(TestCaseError::fail(format!("expected a tag, got {other:?}")))
            }
        };
        let prefix = format!("{}:{}#", capability, provider_of(capability));
        prop_assert!(tag.starts_with(&prefix), "tag {} lacks prefix {}", tag, prefix);
    }

    #[test]
    fn both_engines_land_on_the_same_layer(kinds in kind_stack(), capability in registered_capability()) {
        prop_assume!(!kinds.is_empty());
        let log = EventLog::new();
        let registry = synthetic::registry(&log);

        let mut mix_chain = build(&kinds, &log);
        let mix_outcome = mixdispatch::invoke(&mut mix_chain, capability, &[], registry.table());

        let mut d2_chain = match build(&kinds, &log) {
            Component::Layer(layer) => *layer,
            Component::Concrete(_) => unreachable!("kinds is nonempty"),
        };
        let dispatcher = d2dispatch::make_dispatcher(registry.table(), capability, Vec::new()).unwrap();
        let d2_outcome = d2dispatch::apply(&mut d2_chain, &dispatcher, registry.table());

        match (mix_outcome, d2_outcome) {
            (Ok(Value::Text(mix_tag)), Ok(Value::Text(d2_tag))) => {
                // Instance ids differ between the two builds; the executing
                // capability and kind must not.
                let strip = |tag: &str| tag.split('#').next().unwrap().to_string();
                prop_assert_eq!(strip(&mix_tag), strip(&d2_tag));
            }
            (Err(mix_error), Err(d2_error)) => {
                prop_assert!(mix_error.is_unsupported());
                prop_assert!(d2_error.is_unsupported());
                prop_assert_eq!(mix_error.to_string(), d2_error.to_string());
            }
            (mix_outcome, d2_outcome) => {
                return Err(TestCaseError::fail(format!(
                    "engines disagree: {mix_outcome:?} vs {d2_outcome:?}"
                )))
            }
        }
    }

    #[test]
    fn late_registration_reaches_chains_built_earlier(kinds in kind_stack()) {
        prop_assume!(kinds.contains(&D4) || kinds.contains(&D4PRIME));
        let log = EventLog::new();
        let mut registry = synthetic::registry(&log);
        let mut chain = build(&kinds, &log);

        let before = mixdispatch::invoke(&mut chain, F4, &[], registry.table());
        prop_assert!(before.unwrap_err().is_unsupported());

        register_capability(registry.table_mut(), synthetic::f4_capability(), &[D4, D4PRIME])
            .unwrap();

        let value = mixdispatch::invoke(&mut chain, F4, &[], registry.table()).unwrap();
        let expected_kind = kinds
            .iter()
            .find(|kind| **kind == D4 || **kind == D4PRIME)
            .unwrap();
        let tag = match value {
            Value::Text(tag) => tag,
            other => {
                return Err(TestCaseError::fail(format!("expected a tag, got {other:?}")))
            }
        };
        let prefix = format!("f4:{expected_kind}#");
        prop_assert!(tag.starts_with(&prefix), "tag {} lacks prefix {}", tag, prefix);
    }
}
