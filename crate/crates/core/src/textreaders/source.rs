//! The concrete component of reader chains: an in-memory character cursor.

use crate::component::{Component, ConcreteBehavior};
use crate::error::Error;
use crate::value::Value;

/// A cursor over the characters of an owned text. The base operation yields
/// one character per call and `Absent` from the end on; reading never fails.
pub struct CharSource {
    chars: Vec<char>,
    position: usize,
}

impl CharSource {
    pub fn new(text: &str) -> Self {
        CharSource {
            chars: text.chars().collect(),
            position: 0,
        }
    }

    pub fn position(&self) -> usize {
        self.position
    }

    pub fn remaining(&self) -> usize {
        self.chars.len() - self.position
    }
}

impl ConcreteBehavior for CharSource {
    fn kind(&self) -> &str {
        super::SOURCE
    }

    fn operation(&mut self) -> Result<Value, Error> {
        match self.chars.get(self.position) {
            Some(&c) => {
                self.position += 1;
                Ok(Value::Char(c))
            }
            None => Ok(Value::Absent),
        }
    }
}

/// Chain-ready source over `text`.
pub fn source(text: &str) -> Component {
    Component::Concrete(Box::new(CharSource::new(text)))
}
