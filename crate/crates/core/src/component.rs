//! The chain model: one concrete object wrapped by zero or more decoration
//! layers.
//!
//! A layer owns its base, so a whole chain is a single value. Wrapping never
//! copies the wrapped chain and peeling a layer returns the identical base,
//! which keeps rewrap workflows cheap and testable by identity. Layers carry
//! behaviour and layer-local state only; which capability a kind provides
//! lives in the [`CapabilityTable`](crate::capability::CapabilityTable), so
//! the answer to `supports` can change when the table is extended, without
//! touching built chains.

use std::fmt;

use crate::capability::CapabilityTable;
use crate::error::Error;
use crate::value::Value;

/// Behaviour of the innermost concrete object.
pub trait ConcreteBehavior: Send {
    fn kind(&self) -> &str;

    /// The base operation every chain forwards to.
    fn operation(&mut self) -> Result<Value, Error>;
}

/// Behaviour of one decoration layer kind: an around-step for the base
/// operation plus the capabilities the kind provides.
pub trait LayerBehavior: Send {
    /// Around-behaviour for the base operation. Implementations decide when,
    /// and whether, to call `base.operation()`.
    fn operation(&mut self, base: &mut Component) -> Result<Value, Error>;

    /// Execute one capability with this layer's own state and its own base as
    /// context. Engines only route capabilities the table assigns to the
    /// layer's kind; anything else is refused as unsupported.
    fn execute(
        &mut self,
        capability: &str,
        args: &[Value],
        base: &mut Component,
    ) -> Result<Value, Error>;
}

/// A chain: the bare concrete object, or a decoration layer wrapping a
/// smaller chain.
pub enum Component {
    Concrete(Box<dyn ConcreteBehavior>),
    Layer(Box<DecorationLayer>),
}

impl Component {
    /// Run the base operation, applying each layer's around-behaviour
    /// outermost first.
    pub fn operation(&mut self) -> Result<Value, Error> {
        match self {
            Component::Concrete(concrete) => concrete.operation(),
            Component::Layer(layer) => layer.operation(),
        }
    }

    /// Kind names outermost first, the concrete object last.
    pub fn describe_chain(&self) -> Vec<String> {
        let mut kinds = Vec::new();
        let mut current = self;
        loop {
            match current {
                Component::Concrete(concrete) => {
                    kinds.push(concrete.kind().to_string());
                    return kinds;
                }
                Component::Layer(layer) => {
                    kinds.push(layer.kind().to_string());
                    current = layer.base();
                }
            }
        }
    }

    /// Number of decoration layers above the concrete object.
    pub fn depth(&self) -> usize {
        match self {
            Component::Concrete(_) => 0,
            Component::Layer(layer) => 1 + layer.base().depth(),
        }
    }

    pub fn as_layer(&self) -> Option<&DecorationLayer> {
        match self {
            Component::Layer(layer) => Some(layer),
            Component::Concrete(_) => None,
        }
    }

    pub fn as_layer_mut(&mut self) -> Option<&mut DecorationLayer> {
        match self {
            Component::Layer(layer) => Some(layer),
            Component::Concrete(_) => None,
        }
    }
}

impl fmt::Debug for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.describe_chain().join(", "))
    }
}

impl From<DecorationLayer> for Component {
    fn from(layer: DecorationLayer) -> Self {
        Component::Layer(Box::new(layer))
    }
}

/// One decoration layer: its kind name, its behaviour with layer-local state,
/// and the chain it wraps.
pub struct DecorationLayer {
    kind: String,
    behavior: Box<dyn LayerBehavior>,
    base: Component,
}

impl DecorationLayer {
    /// Wrap `base` in a layer of `kind` driven by `behavior`. The base is
    /// moved, never copied.
    pub fn new(kind: impl Into<String>, behavior: Box<dyn LayerBehavior>, base: Component) -> Self {
        DecorationLayer {
            kind: kind.into(),
            behavior,
            base,
        }
    }

    pub fn kind(&self) -> &str {
        &self.kind
    }

    pub fn base(&self) -> &Component {
        &self.base
    }

    pub fn base_mut(&mut self) -> &mut Component {
        &mut self.base
    }

    /// Peel exactly this layer off, returning the wrapped chain unchanged.
    pub fn into_base(self) -> Component {
        self.base
    }

    pub fn operation(&mut self) -> Result<Value, Error> {
        self.behavior.operation(&mut self.base)
    }

    /// Kind names from this layer inward.
    pub fn describe_chain(&self) -> Vec<String> {
        let mut kinds = vec![self.kind.clone()];
        kinds.extend(self.base.describe_chain());
        kinds
    }

    /// Whether `table` assigns `capability` to this layer's kind. Pure: the
    /// answer depends only on the kind and the table, never on chain state.
    pub fn supports(&self, capability: &str, table: &CapabilityTable) -> bool {
        table.supports(&self.kind, capability)
    }

    pub(crate) fn execute(&mut self, capability: &str, args: &[Value]) -> Result<Value, Error> {
        self.behavior.execute(capability, args, &mut self.base)
    }
}

impl fmt::Debug for DecorationLayer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.describe_chain().join(", "))
    }
}
