//! Instrumented layer kinds for exercising and measuring the engines.
//!
//! Kinds `D1`..`D4` each provide one capability (`f1`..`f4`), `D4prime` is a
//! second provider of `f4`, and `Plain` provides nothing and only forwards.
//! Layers and the concrete object append to a shared [`EventLog`] as the base
//! operation cascades and when a capability executes, which makes dispatch
//! order and target identity observable from the outside. Quiet variants
//! skip the log and only count, for benchmarking.
//!
//! The registry pre-registers `f1`..`f3`. `f4` is left unregistered on
//! purpose: registering it against the live table, after chains exist, is
//! the extension scenario the engines are built around.

use std::ops::{Deref, DerefMut};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use crate::capability::CapabilityId;
use crate::component::{Component, ConcreteBehavior, DecorationLayer, LayerBehavior};
use crate::error::Error;
use crate::hybridstack::{StackBase, StaticLayer};
use crate::registry::LayerRegistry;
use crate::value::{Signature, Value, ValueKind};

pub const D1: &str = "D1";
pub const D2: &str = "D2";
pub const D3: &str = "D3";
pub const D4: &str = "D4";
pub const D4PRIME: &str = "D4prime";
pub const PLAIN: &str = "Plain";
pub const CONCRETE: &str = "Concrete";

pub const F1: &str = "f1";
pub const F2: &str = "f2";
pub const F3: &str = "f3";
pub const F4: &str = "f4";

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

fn next_id() -> u64 {
    NEXT_ID.fetch_add(1, Ordering::Relaxed)
}

/// One observed step: which kind, which instance, what happened. `action` is
/// `"operation"` for the base operation and the capability name otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Event {
    pub kind: String,
    pub layer: u64,
    pub action: String,
}

/// Shared append-only record of operation cascades and capability
/// executions.
#[derive(Debug, Clone, Default)]
pub struct EventLog {
    events: Arc<Mutex<Vec<Event>>>,
}

impl EventLog {
    pub fn new() -> Self {
        EventLog::default()
    }

    pub fn push(&self, kind: &str, layer: u64, action: &str) {
        self.events.lock().expect("event log poisoned").push(Event {
            kind: kind.to_string(),
            layer,
            action: action.to_string(),
        });
    }

    pub fn snapshot(&self) -> Vec<Event> {
        self.events.lock().expect("event log poisoned").clone()
    }

    /// `(kind, action)` pairs: the log with instance identities projected
    /// away, for comparing cascades across separately built chains.
    pub fn pairs(&self) -> Vec<(String, String)> {
        self.snapshot()
            .into_iter()
            .map(|event| (event.kind, event.action))
            .collect()
    }

    pub fn clear(&self) {
        self.events.lock().expect("event log poisoned").clear();
    }

    pub fn len(&self) -> usize {
        self.events.lock().expect("event log poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

struct SyntheticConcrete {
    id: u64,
    log: Option<EventLog>,
    operations: u64,
}

impl ConcreteBehavior for SyntheticConcrete {
    fn kind(&self) -> &str {
        CONCRETE
    }

    fn operation(&mut self) -> Result<Value, Error> {
        self.operations += 1;
        if let Some(log) = &self.log {
            log.push(CONCRETE, self.id, "operation");
        }
        Ok(Value::Unit)
    }
}

struct SyntheticLayer {
    kind: &'static str,
    id: u64,
    log: Option<EventLog>,
    operations: u64,
}

impl SyntheticLayer {
    fn tag(&self, capability: &str) -> Value {
        Value::Text(format!("{capability}:{}#{}", self.kind, self.id))
    }
}

impl LayerBehavior for SyntheticLayer {
    fn operation(&mut self, base: &mut Component) -> Result<Value, Error> {
        self.operations += 1;
        if let Some(log) = &self.log {
            log.push(self.kind, self.id, "operation");
        }
        base.operation()
    }

    fn execute(
        &mut self,
        capability: &str,
        _args: &[Value],
        _base: &mut Component,
    ) -> Result<Value, Error> {
        if let Some(log) = &self.log {
            log.push(self.kind, self.id, capability);
        }
        Ok(self.tag(capability))
    }
}

/// Concrete component whose operation appends to `log`.
pub fn component(log: &EventLog) -> Component {
    Component::Concrete(Box::new(SyntheticConcrete {
        id: next_id(),
        log: Some(log.clone()),
        operations: 0,
    }))
}

/// Concrete component that only counts operations; for benchmarking.
pub fn quiet_component() -> Component {
    Component::Concrete(Box::new(SyntheticConcrete {
        id: next_id(),
        log: None,
        operations: 0,
    }))
}

/// Registry wiring the six synthetic kinds to `log`, with `f1`..`f3`
/// registered and `f4` intentionally absent.
pub fn registry(log: &EventLog) -> LayerRegistry {
    let mut registry = LayerRegistry::new();
    for kind in [D1, D2, D3, D4, D4PRIME, PLAIN] {
        let log = log.clone();
        registry.register_kind(kind, move |params: &[Value]| {
            if !params.is_empty() {
                return Err(Error::InvalidParams {
                    kind: kind.to_string(),
                    reason: "takes no parameters".to_string(),
                });
            }
            Ok(Box::new(SyntheticLayer {
                kind,
                id: next_id(),
                log: Some(log.clone()),
                operations: 0,
            }))
        });
    }
    let table = registry.table_mut();
    for (capability, provider) in [(F1, D1), (F2, D2), (F3, D3)] {
        table
            .register(
                CapabilityId::new(capability, Signature::nullary(ValueKind::Text)),
                &[provider],
            )
            .expect("fresh table");
    }
    registry
}

/// The `f4` identity matching what [`registry`] registers for `f1`..`f3`;
/// registering it (against `D4`, `D4prime`, or both) is the caller's move.
pub fn f4_capability() -> CapabilityId {
    CapabilityId::new(F4, Signature::nullary(ValueKind::Text))
}

/// Outermost layer of a quiet chain `[Plain × (depth-1), D1]` over a quiet
/// concrete object: the single provider of `f1` sits innermost, the worst
/// case for chain-search dispatch.
pub fn bench_chain(depth: usize) -> DecorationLayer {
    assert!(depth >= 1, "a chain needs at least one layer");
    let mut layer = DecorationLayer::new(
        D1,
        Box::new(SyntheticLayer {
            kind: D1,
            id: next_id(),
            log: None,
            operations: 0,
        }),
        quiet_component(),
    );
    for _ in 1..depth {
        layer = DecorationLayer::new(
            PLAIN,
            Box::new(SyntheticLayer {
                kind: PLAIN,
                id: next_id(),
                log: None,
                operations: 0,
            }),
            layer.into(),
        );
    }
    layer
}

macro_rules! static_kind {
    ($(#[$doc:meta])* $name:ident, $kind:expr $(, $cap:ident)?) => {
        $(#[$doc])*
        pub struct $name<I> {
            inner: I,
            id: u64,
            log: Option<EventLog>,
            operations: u64,
        }

        impl<I: StaticLayer> $name<I> {
            /// Quiet wrapper: counts operations, logs nothing.
            pub fn new(inner: I) -> Self {
                $name { inner, id: next_id(), log: None, operations: 0 }
            }

            pub fn with_log(inner: I, log: &EventLog) -> Self {
                $name { inner, id: next_id(), log: Some(log.clone()), operations: 0 }
            }

            pub fn instance_id(&self) -> u64 {
                self.id
            }

            $(
                /// Statically composed capability: availability was checked
                /// at build time, so the call cannot fail.
                pub fn $cap(&mut self) -> Value {
                    if let Some(log) = &self.log {
                        log.push($kind, self.id, stringify!($cap));
                    }
                    Value::Text(format!("{}:{}#{}", stringify!($cap), $kind, self.id))
                }
            )?
        }

        impl<I: StaticLayer> StaticLayer for $name<I> {
            fn operation(&mut self) -> Result<Value, Error> {
                self.operations += 1;
                if let Some(log) = &self.log {
                    log.push($kind, self.id, "operation");
                }
                self.inner.operation()
            }

            fn unwrap(self) -> Component {
                self.inner.unwrap()
            }
        }

        impl<I> Deref for $name<I> {
            type Target = I;

            fn deref(&self) -> &I {
                &self.inner
            }
        }

        impl<I> DerefMut for $name<I> {
            fn deref_mut(&mut self) -> &mut I {
                &mut self.inner
            }
        }
    };
}

static_kind!(
    /// Static counterpart of `D1`: provides `f1`.
    SD1, D1, f1
);
static_kind!(
    /// Static counterpart of `D2`: provides `f2`.
    SD2, D2, f2
);
static_kind!(
    /// Static counterpart of `D3`: provides `f3`.
    SD3, D3, f3
);
static_kind!(
    /// Static counterpart of `Plain`: forwards and provides nothing.
    SPlain, PLAIN
);

type P1<T> = SPlain<T>;
type P2<T> = P1<P1<T>>;
type P4<T> = P2<P2<T>>;
type P8<T> = P4<P4<T>>;

pub type BenchStack1 = SD1<StackBase>;
pub type BenchStack2 = P1<BenchStack1>;
pub type BenchStack3 = P2<BenchStack1>;
pub type BenchStack4 = P2<P1<BenchStack1>>;
pub type BenchStack8 = P4<P2<P1<BenchStack1>>>;
pub type BenchStack16 = P8<P4<P2<P1<BenchStack1>>>>;

fn plain<T: StaticLayer>(inner: T) -> SPlain<T> {
    SPlain::new(inner)
}

fn p2<T: StaticLayer>(inner: T) -> P2<T> {
    plain(plain(inner))
}

fn p4<T: StaticLayer>(inner: T) -> P4<T> {
    p2(p2(inner))
}

fn p8<T: StaticLayer>(inner: T) -> P8<T> {
    p4(p4(inner))
}

fn quiet_f1_base() -> BenchStack1 {
    SD1::new(StackBase::new(quiet_component()))
}

/// Quiet static stacks mirroring [`bench_chain`]: `f1` innermost under
/// forwarding wrappers, at the depths the timing harness precompiles.
pub fn bench_stack_1() -> BenchStack1 {
    quiet_f1_base()
}

pub fn bench_stack_2() -> BenchStack2 {
    plain(quiet_f1_base())
}

pub fn bench_stack_3() -> BenchStack3 {
    p2(quiet_f1_base())
}

pub fn bench_stack_4() -> BenchStack4 {
    p2(plain(quiet_f1_base()))
}

pub fn bench_stack_8() -> BenchStack8 {
    p4(p2(plain(quiet_f1_base())))
}

pub fn bench_stack_16() -> BenchStack16 {
    p8(p4(p2(plain(quiet_f1_base()))))
}
