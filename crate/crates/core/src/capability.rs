//! Capability identities and the table mapping them to providing layer kinds.
//!
//! The table is the single authority for "which layer kind answers which
//! capability". Engines consult it at call time, so registering a capability
//! after chains were built extends those chains immediately; no chain is
//! rebuilt and no layer is touched.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use crate::d2dispatch::Dispatcher;
use crate::error::Error;
use crate::value::{Signature, Value};

/// Name plus signature of one capability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapabilityId {
    name: String,
    signature: Signature,
}

impl CapabilityId {
    pub fn new(name: impl Into<String>, signature: Signature) -> Self {
        CapabilityId {
            name: name.into(),
            signature,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }
}

#[derive(Debug)]
struct Entry {
    signature: Signature,
    providers: BTreeSet<String>,
    /// Shared dispatcher for argument-free capabilities; built on first use.
    singleton: OnceLock<Dispatcher>,
}

/// Capability name to signature and providing layer kinds, open for extension
/// at run time.
#[derive(Debug, Default)]
pub struct CapabilityTable {
    entries: BTreeMap<String, Entry>,
}

impl CapabilityTable {
    pub fn new() -> Self {
        CapabilityTable::default()
    }

    /// Register `capability` as provided by `kinds`. Registering the same
    /// name again with an identical signature is idempotent and merges the
    /// provider sets; a different signature is a conflict.
    pub fn register(&mut self, capability: CapabilityId, kinds: &[&str]) -> Result<(), Error> {
        match self.entries.get_mut(capability.name()) {
            Some(entry) => {
                if entry.signature != *capability.signature() {
                    return Err(Error::SignatureConflict(capability.name().to_string()));
                }
                entry
                    .providers
                    .extend(kinds.iter().map(|kind| kind.to_string()));
                Ok(())
            }
            None => {
                let entry = Entry {
                    signature: capability.signature().clone(),
                    providers: kinds.iter().map(|kind| kind.to_string()).collect(),
                    singleton: OnceLock::new(),
                };
                self.entries.insert(capability.name().to_string(), entry);
                Ok(())
            }
        }
    }

    /// Whether `kind` provides `capability`.
    pub fn supports(&self, kind: &str, capability: &str) -> bool {
        self.entries
            .get(capability)
            .is_some_and(|entry| entry.providers.contains(kind))
    }

    pub fn signature(&self, capability: &str) -> Option<&Signature> {
        self.entries.get(capability).map(|entry| &entry.signature)
    }

    pub fn providers(&self, capability: &str) -> Option<&BTreeSet<String>> {
        self.entries.get(capability).map(|entry| &entry.providers)
    }

    /// Registered capabilities in name order.
    pub fn capabilities(&self) -> impl Iterator<Item = CapabilityId> + '_ {
        self.entries
            .iter()
            .map(|(name, entry)| CapabilityId::new(name.clone(), entry.signature.clone()))
    }

    /// Validate `args` against the registered signature, returning it.
    pub(crate) fn check_args(&self, capability: &str, args: &[Value]) -> Result<&Signature, Error> {
        let signature = self
            .signature(capability)
            .ok_or_else(|| Error::UnknownCapability(capability.to_string()))?;
        if signature.args().len() != args.len() {
            return Err(Error::SignatureMismatch {
                capability: capability.to_string(),
                reason: format!(
                    "expects {} argument(s), got {}",
                    signature.args().len(),
                    args.len()
                ),
            });
        }
        for (position, (arg, kind)) in args.iter().zip(signature.args()).enumerate() {
            if !arg.conforms_to(*kind) {
                return Err(Error::SignatureMismatch {
                    capability: capability.to_string(),
                    reason: format!(
                        "argument {position} expects {kind}, got {}",
                        arg.kind_name()
                    ),
                });
            }
        }
        Ok(signature)
    }

    pub(crate) fn singleton_slot(&self, capability: &str) -> Option<&OnceLock<Dispatcher>> {
        self.entries.get(capability).map(|entry| &entry.singleton)
    }
}

/// Extend `table` at run time; see [`CapabilityTable::register`].
pub fn register_capability(
    table: &mut CapabilityTable,
    capability: CapabilityId,
    kinds: &[&str],
) -> Result<(), Error> {
    table.register(capability, kinds)
}
