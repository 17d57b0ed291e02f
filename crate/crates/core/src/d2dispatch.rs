//! Double dispatch: capability calls travel down the chain as dispatcher
//! command objects.
//!
//! [`apply`] owns the only recursion over the chain; [`dispatch`] asks a
//! single layer to execute the dispatcher's capability or refuse, and never
//! looks past that layer. Dispatchers are constructed from the
//! [`CapabilityTable`] rather than hand-written per capability, so a new
//! capability needs a table entry and nothing else. Argument-free
//! capabilities share one dispatcher per table entry; dispatchers carrying
//! bound arguments are fresh per call site and record their last result.

use std::sync::{Arc, Mutex};

use crate::capability::{CapabilityId, CapabilityTable};
use crate::component::{Component, DecorationLayer};
use crate::error::Error;
use crate::value::Value;

/// A capability call packaged as a value: the capability, its bound
/// arguments, and a slot for the result of the most recent application.
#[derive(Debug, Clone)]
pub struct Dispatcher {
    inner: Arc<Inner>,
}

#[derive(Debug)]
struct Inner {
    capability: CapabilityId,
    bound_args: Vec<Value>,
    result_slot: Mutex<Option<Value>>,
}

impl Dispatcher {
    fn fresh(capability: CapabilityId, bound_args: Vec<Value>) -> Self {
        Dispatcher {
            inner: Arc::new(Inner {
                capability,
                bound_args,
                result_slot: Mutex::new(None),
            }),
        }
    }

    pub fn capability(&self) -> &CapabilityId {
        &self.inner.capability
    }

    pub fn bound_args(&self) -> &[Value] {
        &self.inner.bound_args
    }

    /// Result of the most recent successful application, for dispatchers
    /// carrying bound arguments. The shared argument-free dispatchers stay
    /// stateless and hand results back directly instead.
    pub fn last_result(&self) -> Option<Value> {
        self.inner
            .result_slot
            .lock()
            .expect("result slot poisoned")
            .clone()
    }

    /// Whether two handles are the same dispatcher object.
    pub fn same_instance(a: &Dispatcher, b: &Dispatcher) -> bool {
        Arc::ptr_eq(&a.inner, &b.inner)
    }

    fn is_shared_singleton(&self) -> bool {
        self.inner.capability.signature().args().is_empty()
    }

    fn record(&self, value: &Value) {
        if !self.is_shared_singleton() {
            *self.inner.result_slot.lock().expect("result slot poisoned") = Some(value.clone());
        }
    }
}

/// Build a dispatcher for `capability` with `args` bound, validated against
/// the registered signature. Argument-free capabilities yield one shared
/// dispatcher per table entry; every other call builds a fresh one.
pub fn make_dispatcher(
    table: &CapabilityTable,
    capability: &str,
    args: Vec<Value>,
) -> Result<Dispatcher, Error> {
    let signature = table.check_args(capability, &args)?.clone();
    let id = CapabilityId::new(capability, signature);
    if id.signature().args().is_empty() {
        let slot = table
            .singleton_slot(capability)
            .expect("entry exists: check_args succeeded");
        Ok(slot
            .get_or_init(|| Dispatcher::fresh(id.clone(), Vec::new()))
            .clone())
    } else {
        Ok(Dispatcher::fresh(id, args))
    }
}

/// Offer the dispatcher to exactly one layer. A refusal reports the sub-chain
/// from `target` inward and leaves the rest of the chain untouched; no
/// recursion happens here.
pub fn dispatch(
    d: &Dispatcher,
    target: &mut DecorationLayer,
    table: &CapabilityTable,
) -> Result<Value, Error> {
    let name = d.capability().name();
    if table.supports(target.kind(), name) {
        let value = target.execute(name, d.bound_args())?;
        d.record(&value);
        Ok(value)
    } else {
        Err(Error::unsupported(name, target.describe_chain()))
    }
}

/// Walk the chain outermost first, offering the dispatcher to each layer via
/// [`dispatch`]; the first acceptance wins. This is the engine's only
/// recursion site. When the walk bottoms out the error carries the receiving
/// chain in full.
pub fn apply(
    chain: &mut DecorationLayer,
    d: &Dispatcher,
    table: &CapabilityTable,
) -> Result<Value, Error> {
    let full_chain = chain.describe_chain();
    apply_inner(chain, d, table).map_err(|error| match error {
        Error::Unsupported { capability, .. } => Error::Unsupported {
            capability,
            chain: full_chain,
        },
        other => other,
    })
}

fn apply_inner(
    chain: &mut DecorationLayer,
    d: &Dispatcher,
    table: &CapabilityTable,
) -> Result<Value, Error> {
    match dispatch(d, chain, table) {
        Err(refusal @ Error::Unsupported { .. }) => match chain.base_mut() {
            Component::Layer(inner) => apply_inner(inner, d, table),
            Component::Concrete(_) => Err(refusal),
        },
        outcome => outcome,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::capability::register_capability;
    use crate::mixdispatch;
    use crate::synthetic::{self, EventLog};
    use crate::textreaders;

    fn layer_of(
        kinds: &[&str],
        registry: &crate::LayerRegistry,
        log: &EventLog,
    ) -> DecorationLayer {
        let mut chain = synthetic::component(log);
        for kind in kinds[1..].iter().rev() {
            chain = registry.wrap(chain, kind, &[]).unwrap().into();
        }
        registry.wrap(chain, kinds[0], &[]).unwrap()
    }

    #[test]
    fn argument_free_dispatchers_are_shared() {
        let log = EventLog::new();
        let registry = synthetic::registry(&log);
        let a = make_dispatcher(registry.table(), "f1", vec![]).unwrap();
        let b = make_dispatcher(registry.table(), "f1", vec![]).unwrap();
        let other = make_dispatcher(registry.table(), "f2", vec![]).unwrap();
        assert!(Dispatcher::same_instance(&a, &b));
        assert!(!Dispatcher::same_instance(&a, &other));
    }

    #[test]
    fn bound_argument_dispatchers_are_fresh_and_record_results() {
        let registry = textreaders::registry();
        let a = make_dispatcher(
            registry.table(),
            textreaders::UNREAD,
            vec![Value::Char('x')],
        )
        .unwrap();
        let b = make_dispatcher(
            registry.table(),
            textreaders::UNREAD,
            vec![Value::Char('x')],
        )
        .unwrap();
        assert!(!Dispatcher::same_instance(&a, &b));
        assert_eq!(a.last_result(), None);

        let mut chain = registry
            .wrap(textreaders::source("ab"), textreaders::PUSHBACK, &[])
            .unwrap();
        apply(&mut chain, &a, registry.table()).unwrap();
        assert_eq!(a.last_result(), Some(Value::Unit));
        assert_eq!(b.last_result(), None);
    }

    #[test]
    fn make_dispatcher_validates_capability_and_arguments() {
        let log = EventLog::new();
        let registry = synthetic::registry(&log);
        assert!(matches!(
            make_dispatcher(registry.table(), "f9", vec![]).unwrap_err(),
            Error::UnknownCapability(name) if name == "f9"
        ));
        assert!(matches!(
            make_dispatcher(registry.table(), "f1", vec![Value::Char('x')]).unwrap_err(),
            Error::SignatureMismatch { .. }
        ));
    }

    #[test]
    fn dispatch_inspects_only_the_offered_layer() {
        let log = EventLog::new();
        let registry = synthetic::registry(&log);
        let mut outer = layer_of(&["Plain", "D1"], &registry, &log);
        let d = make_dispatcher(registry.table(), "f1", vec![]).unwrap();

        let err = dispatch(&d, &mut outer, registry.table()).unwrap_err();
        match err {
            Error::Unsupported { capability, chain } => {
                assert_eq!(capability, "f1");
                assert_eq!(chain, vec!["Plain", "D1", "Concrete"]);
            }
            other => panic!("expected Unsupported, got {other:?}"),
        }
        assert!(log.is_empty(), "no layer may have executed");
    }

    #[test]
    fn apply_walks_to_the_outermost_provider() {
        let log = EventLog::new();
        let registry = synthetic::registry(&log);
        let mut chain = layer_of(&["D1", "D2", "D3"], &registry, &log);
        let d = make_dispatcher(registry.table(), "f3", vec![]).unwrap();

        let value = apply(&mut chain, &d, registry.table()).unwrap();
        assert_eq!(log.pairs(), vec![("D3".to_string(), "f3".to_string())]);
        assert!(matches!(value, Value::Text(tag) if tag.starts_with("f3:D3#")));
    }

    #[test]
    fn apply_and_invoke_agree_on_duplicate_providers() {
        let log = EventLog::new();
        let mut registry = synthetic::registry(&log);
        register_capability(
            registry.table_mut(),
            synthetic::f4_capability(),
            &["D4", "D4prime"],
        )
        .unwrap();
        let mut layer = layer_of(&["D4prime", "D4"], &registry, &log);
        let d = make_dispatcher(registry.table(), "f4", vec![]).unwrap();

        let via_apply = apply(&mut layer, &d, registry.table()).unwrap();
        let mut chain: Component = layer.into();
        let via_invoke = mixdispatch::invoke(&mut chain, "f4", &[], registry.table()).unwrap();
        assert_eq!(
            via_apply, via_invoke,
            "both engines must pick the outermost D4prime"
        );
    }

    #[test]
    fn a_reused_dispatcher_lands_on_the_same_layer() {
        let log = EventLog::new();
        let registry = synthetic::registry(&log);
        let mut chain = layer_of(&["Plain", "D2", "D2"], &registry, &log);
        let d = make_dispatcher(registry.table(), "f2", vec![]).unwrap();

        let first = apply(&mut chain, &d, registry.table()).unwrap();
        let second = apply(&mut chain, &d, registry.table()).unwrap();
        assert_eq!(first, second, "same target layer, same tag");
    }

    #[test]
    fn an_exhausted_walk_reports_the_full_receiving_chain() {
        let log = EventLog::new();
        let registry = synthetic::registry(&log);
        let mut chain = layer_of(&["D1", "D2"], &registry, &log);
        let d = make_dispatcher(registry.table(), "f3", vec![]).unwrap();

        let err = apply(&mut chain, &d, registry.table()).unwrap_err();
        match err {
            Error::Unsupported { capability, chain } => {
                assert_eq!(capability, "f3");
                assert_eq!(chain, vec!["D1", "D2", "Concrete"]);
            }
            other => panic!("expected Unsupported, got {other:?}"),
        }
    }
}
