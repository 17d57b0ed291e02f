//! Layer kinds by name: the construction side of the chain model.
//!
//! A registry pairs kind-name factories with the [`CapabilityTable`] those
//! kinds are registered in, so a chain described as text (kind names plus
//! parameters) can be turned into a chain and then queried through any
//! engine against the same table.

use std::collections::BTreeMap;
use std::fmt;

use crate::capability::CapabilityTable;
use crate::component::{Component, DecorationLayer, LayerBehavior};
use crate::error::Error;
use crate::value::Value;

type Factory = Box<dyn Fn(&[Value]) -> Result<Box<dyn LayerBehavior>, Error> + Send + Sync>;

/// Kind-name factories plus the capability table for those kinds.
#[derive(Default)]
pub struct LayerRegistry {
    kinds: BTreeMap<String, Factory>,
    table: CapabilityTable,
}

impl LayerRegistry {
    pub fn new() -> Self {
        LayerRegistry::default()
    }

    /// Register a layer kind. The factory receives the construction
    /// parameters and is expected to reject what it cannot interpret.
    pub fn register_kind(
        &mut self,
        name: impl Into<String>,
        factory: impl Fn(&[Value]) -> Result<Box<dyn LayerBehavior>, Error> + Send + Sync + 'static,
    ) {
        self.kinds.insert(name.into(), Box::new(factory));
    }

    pub fn has_kind(&self, name: &str) -> bool {
        self.kinds.contains_key(name)
    }

    /// Registered kind names in name order.
    pub fn kind_names(&self) -> impl Iterator<Item = &str> {
        self.kinds.keys().map(String::as_str)
    }

    pub fn table(&self) -> &CapabilityTable {
        &self.table
    }

    pub fn table_mut(&mut self) -> &mut CapabilityTable {
        &mut self.table
    }

    /// Wrap `base` in a new layer of `kind`. The base is moved, never copied;
    /// peeling the returned layer yields it back unchanged.
    pub fn wrap(
        &self,
        base: Component,
        kind: &str,
        params: &[Value],
    ) -> Result<DecorationLayer, Error> {
        let factory = self
            .kinds
            .get(kind)
            .ok_or_else(|| Error::UnknownKind(kind.to_string()))?;
        let behavior = factory(params)?;
        Ok(DecorationLayer::new(kind, behavior, base))
    }
}

impl fmt::Debug for LayerRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LayerRegistry")
            .field("kinds", &self.kinds.keys().collect::<Vec<_>>())
            .finish_non_exhaustive()
    }
}
