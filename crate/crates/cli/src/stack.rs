//! Parsing of decoration-stack specs like `words|sentences|pushback(16)`.
//!
//! Items are pipe-separated, leftmost outermost, whitespace around names and
//! parameters ignored. A parameter list is parenthesized and comma-separated;
//! an unsigned integer becomes a count, anything else (optionally single- or
//! double-quoted) becomes text.

use garnish_core::{Error, Value};

#[derive(Debug, Clone, PartialEq)]
pub struct StackItem {
    pub kind: String,
    pub params: Vec<Value>,
}

/// An ordered stack description, outermost layer first.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct StackSpec {
    pub items: Vec<StackItem>,
}

impl StackSpec {
    pub fn has_kind(&self, kind: &str) -> bool {
        self.items.iter().any(|item| item.kind == kind)
    }
}

pub fn parse_stack_spec(text: &str) -> Result<StackSpec, Error> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(StackSpec::default());
    }
    let items = text.split('|').map(parse_item).collect::<Result<_, _>>()?;
    Ok(StackSpec { items })
}

fn parse_item(token: &str) -> Result<StackItem, Error> {
    let token = token.trim();
    let malformed = || Error::Config(format!("malformed stack item: '{token}'"));

    let (name, params) = match token.split_once('(') {
        None => (token, Vec::new()),
        Some((name, rest)) => {
            let inner = rest.strip_suffix(')').ok_or_else(malformed)?;
            let params = inner
                .split(',')
                .map(|p| parse_param(p).ok_or_else(malformed))
                .collect::<Result<_, _>>()?;
            (name.trim_end(), params)
        }
    };
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(malformed());
    }
    Ok(StackItem {
        kind: name.to_string(),
        params,
    })
}

fn parse_param(token: &str) -> Option<Value> {
    let token = token.trim();
    if token.is_empty() {
        return None;
    }
    if token.chars().all(|c| c.is_ascii_digit()) {
        return token.parse().ok().map(Value::Count);
    }
    for quote in ['"', '\''] {
        if let Some(inner) = token
            .strip_prefix(quote)
            .and_then(|rest| rest.strip_suffix(quote))
        {
            return Some(Value::Text(inner.to_string()));
        }
    }
    Some(Value::Text(token.to_string()))
}
