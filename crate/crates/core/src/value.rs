//! Dynamic values exchanged with decoration chains.
//!
//! Chains are assembled at run time from layer kinds the compiler never sees
//! together, so the base operation and every capability speak one small value
//! vocabulary. `Absent` is the distinguished end-of-input result; it is a
//! value, not an error.

use std::fmt;

/// A value flowing into or out of a chain: a capability argument, a
/// capability result, or the result of the base operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    /// No payload; returned by effect-only capabilities.
    Unit,
    /// End of input. Reading past the end keeps producing `Absent`.
    Absent,
    Bool(bool),
    /// Unsigned quantity: counters, checksums, sizes.
    Count(u64),
    Char(char),
    Text(String),
}

impl Value {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Value::Unit => "unit",
            Value::Absent => "absent",
            Value::Bool(_) => "bool",
            Value::Count(_) => "count",
            Value::Char(_) => "char",
            Value::Text(_) => "text",
        }
    }

    /// Whether this value is admissible where `kind` is declared.
    /// `Absent` conforms only to the optional kinds.
    pub fn conforms_to(&self, kind: ValueKind) -> bool {
        matches!(
            (self, kind),
            (Value::Unit, ValueKind::Unit)
                | (Value::Bool(_), ValueKind::Bool)
                | (Value::Count(_), ValueKind::Count)
                | (Value::Char(_), ValueKind::Char | ValueKind::OptionalChar)
                | (Value::Text(_), ValueKind::Text | ValueKind::OptionalText)
                | (
                    Value::Absent,
                    ValueKind::OptionalChar | ValueKind::OptionalText
                )
        )
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Unit => f.write_str("ok"),
            Value::Absent => f.write_str("none"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Count(n) => write!(f, "{n}"),
            Value::Char(c) => write!(f, "{c}"),
            Value::Text(s) => f.write_str(s),
        }
    }
}

/// The type half of a capability signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueKind {
    Unit,
    Bool,
    Count,
    Char,
    Text,
    /// A `Char`, or `Absent` at end of input.
    OptionalChar,
    /// A `Text`, or `Absent` at end of input.
    OptionalText,
}

impl fmt::Display for ValueKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ValueKind::Unit => "unit",
            ValueKind::Bool => "bool",
            ValueKind::Count => "count",
            ValueKind::Char => "char",
            ValueKind::Text => "text",
            ValueKind::OptionalChar => "optional char",
            ValueKind::OptionalText => "optional text",
        })
    }
}

/// Argument and result types of one capability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    args: Vec<ValueKind>,
    result: ValueKind,
}

impl Signature {
    pub fn new(args: Vec<ValueKind>, result: ValueKind) -> Self {
        Signature { args, result }
    }

    pub fn nullary(result: ValueKind) -> Self {
        Signature {
            args: Vec::new(),
            result,
        }
    }

    pub fn args(&self) -> &[ValueKind] {
        &self.args
    }

    pub fn result(&self) -> ValueKind {
        self.result
    }
}
