//! Chain construction, input draining, and query answering.
//!
//! The input is drained before any query runs: through `read_word` when the
//! stack contains a words layer (the outermost one drives, as with any
//! capability), otherwise through the plain character operation. Counting
//! layers therefore report what flowed through them during that drain, which
//! depends on where they sit relative to the reading layer.

use std::time::Instant;

use clap::ValueEnum;
use garnish_core::textreaders::{
    self, GET_CHECKSUM, GET_NO_CHARS, GET_NO_SENTENCES, GET_NO_WORDS, READ_WORD, WORDS,
};
use garnish_core::{d2dispatch, mixdispatch, Component, Error, LayerRegistry, Value};

use crate::report::{QueryEntry, StatsReport};
use crate::stack::StackSpec;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Mix,
    D2,
}

/// Short query names accepted on the command line for the counting
/// capabilities.
pub const QUERY_ALIASES: [(&str, &str); 4] = [
    ("no_chars", GET_NO_CHARS),
    ("no_words", GET_NO_WORDS),
    ("no_sentences", GET_NO_SENTENCES),
    ("checksum", GET_CHECKSUM),
];

/// Resolve a query name to a capability name; non-aliases pass through.
pub fn resolve_query(name: &str) -> &str {
    QUERY_ALIASES
        .iter()
        .find(|(alias, _)| *alias == name)
        .map(|(_, capability)| *capability)
        .unwrap_or(name)
}

/// Build the chain a spec describes around an in-memory source.
pub fn build_chain(
    registry: &LayerRegistry,
    spec: &StackSpec,
    input: &str,
) -> Result<Component, Error> {
    let mut chain = textreaders::source(input);
    for item in spec.items.iter().rev() {
        chain = registry.wrap(chain, &item.kind, &item.params)?.into();
    }
    Ok(chain)
}

/// One capability call through the chosen engine.
pub fn call(
    engine: Engine,
    chain: &mut Component,
    capability: &str,
    args: &[Value],
    registry: &LayerRegistry,
) -> Result<Value, Error> {
    match engine {
        Engine::Mix => mixdispatch::invoke(chain, capability, args, registry.table()),
        Engine::D2 => match chain {
            Component::Layer(layer) => {
                let dispatcher =
                    d2dispatch::make_dispatcher(registry.table(), capability, args.to_vec())?;
                d2dispatch::apply(layer, &dispatcher, registry.table())
            }
            Component::Concrete(_) => Err(Error::unsupported(capability, chain.describe_chain())),
        },
    }
}

fn drain(
    engine: Engine,
    chain: &mut Component,
    spec: &StackSpec,
    registry: &LayerRegistry,
) -> Result<(), Error> {
    if spec.has_kind(WORDS) {
        while call(engine, chain, READ_WORD, &[], registry)? != Value::Absent {}
    } else {
        while chain.operation()? != Value::Absent {}
    }
    Ok(())
}

/// Drain the input through the chain, then answer each query in order.
/// Configuration problems abort; per-query failures land in the report.
pub fn run_pipeline(
    registry: &LayerRegistry,
    spec: &StackSpec,
    input: &str,
    queries: &[String],
    engine: Engine,
) -> Result<StatsReport, Error> {
    let started = Instant::now();
    let mut chain = build_chain(registry, spec, input)?;
    drain(engine, &mut chain, spec, registry)?;

    let mut entries = Vec::with_capacity(queries.len());
    for query in queries {
        let capability = resolve_query(query);
        if registry.table().signature(capability).is_none() {
            return Err(Error::Config(format!("unknown query: {query}")));
        }
        let outcome = call(engine, &mut chain, capability, &[], registry);
        entries.push(QueryEntry::new(query, outcome));
    }

    let mut chain_kinds = chain.describe_chain();
    chain_kinds.pop();
    Ok(StatsReport {
        chain: chain_kinds,
        entries,
        runtime_ms: started.elapsed().as_millis(),
    })
}
