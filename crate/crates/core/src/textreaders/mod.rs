//! Character-stream decorations: counting, word and sentence tokenizing,
//! pushback, checksumming, and buffering over an in-memory character source.
//!
//! Six layer kinds and seven capabilities:
//!
//! | kind       | capabilities                        | parameters                 |
//! |------------|-------------------------------------|----------------------------|
//! | `counter`  | `get_no_chars`                      | none                       |
//! | `words`    | `read_word`, `get_no_words`         | none                       |
//! | `sentences`| `read_sentence`, `get_no_sentences` | terminator set, `".!?"`    |
//! | `pushback` | `unread`                            | capacity, default 64       |
//! | `crc32`    | `get_checksum`                      | none                       |
//! | `buffer`   | none                                | block size, default 8192   |
//!
//! Characters are Unicode scalar values; the checksum runs over their UTF-8
//! bytes. Word characters are the alphanumerics, everything else separates.
//! End of input is `Absent`, never an error.

mod crc32;
mod layers;
mod source;

pub use crc32::Crc32;
pub use source::{source, CharSource};

use crate::capability::CapabilityId;
use crate::error::Error;
use crate::registry::LayerRegistry;
use crate::value::{Signature, Value, ValueKind};

pub const SOURCE: &str = "source";
pub const COUNTER: &str = "counter";
pub const WORDS: &str = "words";
pub const SENTENCES: &str = "sentences";
pub const PUSHBACK: &str = "pushback";
pub const CRC32: &str = "crc32";
pub const BUFFER: &str = "buffer";

pub const GET_NO_CHARS: &str = "get_no_chars";
pub const READ_WORD: &str = "read_word";
pub const GET_NO_WORDS: &str = "get_no_words";
pub const READ_SENTENCE: &str = "read_sentence";
pub const GET_NO_SENTENCES: &str = "get_no_sentences";
pub const UNREAD: &str = "unread";
pub const GET_CHECKSUM: &str = "get_checksum";

pub const DEFAULT_SENTENCE_TERMINATORS: &str = ".!?";
pub const DEFAULT_PUSHBACK_CAPACITY: usize = 64;
pub const DEFAULT_BUFFER_BLOCK: usize = 8192;

/// The five decorator kinds that provide capabilities (everything except
/// `buffer`), as chain builders and tests enumerate them.
pub const CAPABILITY_KINDS: [&str; 5] = [COUNTER, WORDS, SENTENCES, PUSHBACK, CRC32];

/// All seven reader capabilities.
pub const CAPABILITIES: [&str; 7] = [
    GET_NO_CHARS,
    READ_WORD,
    GET_NO_WORDS,
    READ_SENTENCE,
    GET_NO_SENTENCES,
    UNREAD,
    GET_CHECKSUM,
];

fn no_params(kind: &'static str, params: &[Value]) -> Result<(), Error> {
    if params.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidParams {
            kind: kind.to_string(),
            reason: "takes no parameters".to_string(),
        })
    }
}

fn count_param(kind: &'static str, params: &[Value], default: usize) -> Result<usize, Error> {
    match params {
        [] => Ok(default),
        [Value::Count(n)] if *n >= 1 => Ok(*n as usize),
        [Value::Count(_)] => Err(Error::InvalidParams {
            kind: kind.to_string(),
            reason: "size must be at least 1".to_string(),
        }),
        _ => Err(Error::InvalidParams {
            kind: kind.to_string(),
            reason: "expects one positive integer".to_string(),
        }),
    }
}

/// Registry with the six reader kinds and the seven reader capabilities.
pub fn registry() -> LayerRegistry {
    let mut registry = LayerRegistry::new();

    registry.register_kind(COUNTER, |params| {
        no_params(COUNTER, params)?;
        Ok(Box::new(layers::CharCounter::new()))
    });
    registry.register_kind(WORDS, |params| {
        no_params(WORDS, params)?;
        Ok(Box::new(layers::WordReader::new()))
    });
    registry.register_kind(SENTENCES, |params| {
        let terminators = match params {
            [] => DEFAULT_SENTENCE_TERMINATORS.chars().collect(),
            [Value::Text(set)] if !set.is_empty() => set.chars().collect(),
            _ => {
                return Err(Error::InvalidParams {
                    kind: SENTENCES.to_string(),
                    reason: "expects one non-empty terminator string".to_string(),
                })
            }
        };
        Ok(Box::new(layers::SentenceReader::new(terminators)))
    });
    registry.register_kind(PUSHBACK, |params| {
        let capacity = count_param(PUSHBACK, params, DEFAULT_PUSHBACK_CAPACITY)?;
        Ok(Box::new(layers::Pushback::new(capacity)))
    });
    registry.register_kind(CRC32, |params| {
        no_params(CRC32, params)?;
        Ok(Box::new(layers::Checksum::new()))
    });
    registry.register_kind(BUFFER, |params| {
        let block = count_param(BUFFER, params, DEFAULT_BUFFER_BLOCK)?;
        Ok(Box::new(layers::Buffered::new(block)))
    });

    let table = registry.table_mut();
    let count = Signature::nullary(ValueKind::Count);
    let optional_text = Signature::nullary(ValueKind::OptionalText);
    let registrations = [
        (GET_NO_CHARS, count.clone(), COUNTER),
        (READ_WORD, optional_text.clone(), WORDS),
        (GET_NO_WORDS, count.clone(), WORDS),
        (READ_SENTENCE, optional_text, SENTENCES),
        (GET_NO_SENTENCES, count.clone(), SENTENCES),
        (
            UNREAD,
            Signature::new(vec![ValueKind::Char], ValueKind::Unit),
            PUSHBACK,
        ),
        (GET_CHECKSUM, count, CRC32),
    ];
    for (capability, signature, provider) in registrations {
        table
            .register(CapabilityId::new(capability, signature), &[provider])
            .expect("fresh table");
    }
    registry
}
