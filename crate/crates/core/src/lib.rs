//! Composable decoration chains with three interchangeable ways of reaching
//! a capability that lives somewhere in the chain.
//!
//! A chain is a [`Component`]: either a concrete endpoint or a
//! [`DecorationLayer`] wrapping another component. Layers declare what they
//! can do through a [`CapabilityTable`], and callers pick a dispatch style:
//!
//! * [`mixdispatch`] walks the chain from the outside at call time and runs
//!   the first layer whose kind provides the capability.
//! * [`d2dispatch`] reifies the request as a [`d2dispatch::Dispatcher`]
//!   command object; each layer inspects it and either handles it or passes
//!   it inward.
//! * [`hybridstack`] composes wrappers by value at compile time, so a
//!   capability call is an ordinary method call and a missing capability is
//!   a type error.
//!
//! The [`textreaders`] module supplies a working decorator family over
//! character streams, and [`synthetic`] supplies instrumented layers for
//! tests and benchmarks.
//!
//! ```
//! use garnish_core::textreaders::{self, GET_NO_WORDS, READ_WORD, WORDS};
//! use garnish_core::{mixdispatch, Component, Value};
//!
//! let registry = textreaders::registry();
//! let mut chain: Component = registry
//!     .wrap(textreaders::source("to be or not"), WORDS, &[])
//!     .unwrap()
//!     .into();
//!
//! while mixdispatch::invoke(&mut chain, READ_WORD, &[], registry.table()).unwrap()
//!     != Value::Absent
//! {}
//! let words = mixdispatch::invoke(&mut chain, GET_NO_WORDS, &[], registry.table()).unwrap();
//! assert_eq!(words, Value::Count(4));
//! ```

mod capability;
mod component;
pub mod d2dispatch;
mod error;
pub mod hybridstack;
pub mod mixdispatch;
mod registry;
pub mod synthetic;
pub mod textreaders;
mod value;

pub use capability::{register_capability, CapabilityId, CapabilityTable};
pub use component::{Component, ConcreteBehavior, DecorationLayer, LayerBehavior};
pub use error::Error;
pub use registry::LayerRegistry;
pub use value::{Signature, Value, ValueKind};
