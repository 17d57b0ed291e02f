//! The reader decoration behaviours.
//!
//! Every capability observes what flows through its own layer. A counter
//! above a pushback layer counts a pushed-back character twice because it
//! delivers it twice; a counter below a buffered layer counts characters the
//! moment they are prefetched. Word and sentence extraction pull characters
//! through their own layer's around-behaviour, so layers above them see
//! nothing of that traffic and layers below see all of it.

use std::collections::VecDeque;

use super::crc32::Crc32;
use crate::component::{Component, LayerBehavior};
use crate::error::Error;
use crate::value::Value;

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric()
}

/// Counts characters delivered through this layer.
pub(super) struct CharCounter {
    count: u64,
}

impl CharCounter {
    pub(super) fn new() -> Self {
        CharCounter { count: 0 }
    }
}

impl LayerBehavior for CharCounter {
    fn operation(&mut self, base: &mut Component) -> Result<Value, Error> {
        let value = base.operation()?;
        if let Value::Char(_) = value {
            self.count += 1;
        }
        Ok(value)
    }

    fn execute(
        &mut self,
        capability: &str,
        _args: &[Value],
        _base: &mut Component,
    ) -> Result<Value, Error> {
        match capability {
            super::GET_NO_CHARS => Ok(Value::Count(self.count)),
            other => Err(Error::unsupported(other, vec![super::COUNTER.to_string()])),
        }
    }
}

/// Extracts maximal alphanumeric runs and counts them. A separator read to
/// find a word's end is held back and delivered on the next read.
pub(super) struct WordReader {
    words: u64,
    held: Option<char>,
}

impl WordReader {
    pub(super) fn new() -> Self {
        WordReader {
            words: 0,
            held: None,
        }
    }

    fn next_char(&mut self, base: &mut Component) -> Result<Value, Error> {
        match self.held.take() {
            Some(c) => Ok(Value::Char(c)),
            None => base.operation(),
        }
    }

    fn read_word(&mut self, base: &mut Component) -> Result<Value, Error> {
        let mut word = String::new();
        loop {
            match self.next_char(base)? {
                Value::Char(c) if is_word_char(c) => {
                    word.push(c);
                    break;
                }
                Value::Char(_) => continue,
                _ => return Ok(Value::Absent),
            }
        }
        loop {
            match self.next_char(base)? {
                Value::Char(c) if is_word_char(c) => word.push(c),
                Value::Char(c) => {
                    self.held = Some(c);
                    break;
                }
                _ => break,
            }
        }
        self.words += 1;
        Ok(Value::Text(word))
    }
}

impl LayerBehavior for WordReader {
    fn operation(&mut self, base: &mut Component) -> Result<Value, Error> {
        self.next_char(base)
    }

    fn execute(
        &mut self,
        capability: &str,
        _args: &[Value],
        base: &mut Component,
    ) -> Result<Value, Error> {
        match capability {
            super::READ_WORD => self.read_word(base),
            super::GET_NO_WORDS => Ok(Value::Count(self.words)),
            other => Err(Error::unsupported(other, vec![super::WORDS.to_string()])),
        }
    }
}

/// Extracts text up to and including a terminator and counts sentences. A
/// trailing unterminated fragment counts as one sentence at end of input.
pub(super) struct SentenceReader {
    sentences: u64,
    terminators: Vec<char>,
}

impl SentenceReader {
    pub(super) fn new(terminators: Vec<char>) -> Self {
        SentenceReader {
            sentences: 0,
            terminators,
        }
    }

    fn read_sentence(&mut self, base: &mut Component) -> Result<Value, Error> {
        let mut sentence = String::new();
        loop {
            match base.operation()? {
                Value::Char(c) => {
                    sentence.push(c);
                    if self.terminators.contains(&c) {
                        self.sentences += 1;
                        return Ok(Value::Text(sentence));
                    }
                }
                _ => {
                    if sentence.is_empty() {
                        return Ok(Value::Absent);
                    }
                    self.sentences += 1;
                    return Ok(Value::Text(sentence));
                }
            }
        }
    }
}

impl LayerBehavior for SentenceReader {
    fn operation(&mut self, base: &mut Component) -> Result<Value, Error> {
        base.operation()
    }

    fn execute(
        &mut self,
        capability: &str,
        _args: &[Value],
        base: &mut Component,
    ) -> Result<Value, Error> {
        match capability {
            super::READ_SENTENCE => self.read_sentence(base),
            super::GET_NO_SENTENCES => Ok(Value::Count(self.sentences)),
            other => Err(Error::unsupported(
                other,
                vec![super::SENTENCES.to_string()],
            )),
        }
    }
}

/// Last-in-first-out pushback: unread characters are delivered again before
/// anything is read from below.
pub(super) struct Pushback {
    stack: Vec<char>,
    capacity: usize,
}

impl Pushback {
    pub(super) fn new(capacity: usize) -> Self {
        Pushback {
            stack: Vec::new(),
            capacity,
        }
    }
}

impl LayerBehavior for Pushback {
    fn operation(&mut self, base: &mut Component) -> Result<Value, Error> {
        match self.stack.pop() {
            Some(c) => Ok(Value::Char(c)),
            None => base.operation(),
        }
    }

    fn execute(
        &mut self,
        capability: &str,
        args: &[Value],
        _base: &mut Component,
    ) -> Result<Value, Error> {
        match capability {
            super::UNREAD => match args {
                [Value::Char(c)] => {
                    if self.stack.len() == self.capacity {
                        return Err(Error::PushbackOverflow(self.capacity));
                    }
                    self.stack.push(*c);
                    Ok(Value::Unit)
                }
                _ => Err(Error::SignatureMismatch {
                    capability: capability.to_string(),
                    reason: "expects one char argument".to_string(),
                }),
            },
            other => Err(Error::unsupported(other, vec![super::PUSHBACK.to_string()])),
        }
    }
}

/// CRC-32 over the bytes of every character delivered through this layer.
pub(super) struct Checksum {
    crc: Crc32,
}

impl Checksum {
    pub(super) fn new() -> Self {
        Checksum { crc: Crc32::new() }
    }
}

impl LayerBehavior for Checksum {
    fn operation(&mut self, base: &mut Component) -> Result<Value, Error> {
        let value = base.operation()?;
        if let Value::Char(c) = value {
            self.crc.update_char(c);
        }
        Ok(value)
    }

    fn execute(
        &mut self,
        capability: &str,
        _args: &[Value],
        _base: &mut Component,
    ) -> Result<Value, Error> {
        match capability {
            super::GET_CHECKSUM => Ok(Value::Count(u64::from(self.crc.value()))),
            other => Err(Error::unsupported(other, vec![super::CRC32.to_string()])),
        }
    }
}

/// Prefetches characters from below in blocks. Delivery is unchanged; only
/// the pattern of inner reads differs, and a block size of one degenerates
/// to the unbuffered behaviour.
pub(super) struct Buffered {
    buffer: VecDeque<char>,
    block: usize,
}

impl Buffered {
    pub(super) fn new(block: usize) -> Self {
        Buffered {
            buffer: VecDeque::new(),
            block,
        }
    }
}

impl LayerBehavior for Buffered {
    fn operation(&mut self, base: &mut Component) -> Result<Value, Error> {
        if self.buffer.is_empty() {
            for _ in 0..self.block {
                match base.operation()? {
                    Value::Char(c) => self.buffer.push_back(c),
                    _ => break,
                }
            }
        }
        Ok(match self.buffer.pop_front() {
            Some(c) => Value::Char(c),
            None => Value::Absent,
        })
    }

    fn execute(
        &mut self,
        capability: &str,
        _args: &[Value],
        _base: &mut Component,
    ) -> Result<Value, Error> {
        Err(Error::unsupported(
            capability,
            vec![super::BUFFER.to_string()],
        ))
    }
}
