//! Reference implementations for the integration tests, written along
//! different routes than the library code they check.

#![allow(dead_code)]

use garnish_core::{Component, ConcreteBehavior, DecorationLayer};

/// Table-driven CRC-32 (reflected, polynomial 0xEDB88320), the classic
/// byte-at-a-time lookup formulation.
pub fn crc32_reference(bytes: &[u8]) -> u32 {
    let mut table = [0u32; 256];
    for (i, slot) in table.iter_mut().enumerate() {
        let mut value = i as u32;
        for _ in 0..8 {
            value = if value & 1 != 0 {
                (value >> 1) ^ 0xEDB8_8320
            } else {
                value >> 1
            };
        }
        *slot = value;
    }
    let mut state = 0xFFFF_FFFFu32;
    for &byte in bytes {
        let index = ((state ^ u32::from(byte)) & 0xFF) as usize;
        state = (state >> 8) ^ table[index];
    }
    !state
}

/// Words as maximal alphanumeric runs, by splitting rather than scanning.
pub fn scan_words(text: &str) -> Vec<String> {
    text.split(|c: char| !c.is_alphanumeric())
        .filter(|word| !word.is_empty())
        .map(str::to_string)
        .collect()
}

/// Sentences as terminator-inclusive segments plus any unterminated tail.
pub fn scan_sentences(text: &str, terminators: &[char]) -> Vec<String> {
    let mut sentences = Vec::new();
    let mut current = String::new();
    for c in text.chars() {
        current.push(c);
        if terminators.contains(&c) {
            sentences.push(std::mem::take(&mut current));
        }
    }
    if !current.is_empty() {
        sentences.push(current);
    }
    sentences
}

/// Address of the outermost node of a chain, for identity assertions.
pub fn chain_addr(component: &Component) -> *const u8 {
    match component {
        Component::Concrete(concrete) => {
            concrete.as_ref() as *const dyn ConcreteBehavior as *const u8
        }
        Component::Layer(layer) => layer.as_ref() as *const DecorationLayer as *const u8,
    }
}

/// All orderings of `items`, by Heap's algorithm.
pub fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    fn generate<T: Clone>(k: usize, items: &mut [T], out: &mut Vec<Vec<T>>) {
        if k <= 1 {
            out.push(items.to_vec());
            return;
        }
        for i in 0..k {
            generate(k - 1, items, out);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    let mut scratch = items.to_vec();
    let mut out = Vec::new();
    generate(scratch.len(), &mut scratch, &mut out);
    out
}
