//! Build-time composed wrapper stacks over one dynamically held component.
//!
//! A static stack is a nest of wrapper types, each embedding the next by
//! value, terminated by a [`StackBase`] that holds the one wrapped dynamic
//! [`Component`]. The whole stack is a single flat value: no per-layer heap
//! nodes and no runtime search. A layer's capabilities are inherent methods
//! reachable through the wrappers' `Deref` chain, so availability is checked
//! by the compiler, a capability call is an ordinary method call, and when
//! two layers provide the same method the outermost wrapper shadows the
//! inner one. The price is rigidity: two different compositions are two
//! different types with no common supertype (the [`StaticLayer`] trait is
//! deliberately not object-safe), and changing the composition means
//! building a new stack, though [`StaticLayer::unwrap`] hands the wrapped
//! component back for exactly that.
//!
//! A capability absent from the composition is a compile error, not a
//! runtime error:
//!
//! ```compile_fail
//! use garnish_core::hybridstack::StackBase;
//! use garnish_core::synthetic::{self, SD1};
//!
//! let mut stack = SD1::new(StackBase::new(synthetic::quiet_component()));
//! stack.f2(); // no layer in this composition provides f2
//! ```

use crate::component::Component;
use crate::error::Error;
use crate::value::Value;

/// One level of a static stack: the wrappers and the terminator implement
/// this. `unwrap` consumes the stack, so the trait has no object-safe form;
/// that is intentional, stacks are meant to stay fully typed.
pub trait StaticLayer {
    /// Run the base operation through the static wrappers and into the
    /// wrapped dynamic component.
    fn operation(&mut self) -> Result<Value, Error>;

    /// Dissolve the stack and hand back the wrapped component unchanged.
    fn unwrap(self) -> Component;
}

/// Terminator of every static stack: holds the wrapped dynamic component.
pub struct StackBase {
    base: Component,
}

impl StackBase {
    pub fn new(base: Component) -> Self {
        StackBase { base }
    }

    pub fn base(&self) -> &Component {
        &self.base
    }
}

impl StaticLayer for StackBase {
    fn operation(&mut self) -> Result<Value, Error> {
        self.base.operation()
    }

    fn unwrap(self) -> Component {
        self.base
    }
}
