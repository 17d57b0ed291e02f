//! The dispatch microbenchmark behind `--bench`.
//!
//! Four ways of reaching `f1` on a chain whose only provider sits at the
//! bottom, measured per call at each requested depth:
//!
//! * `forward`: the plain forwarded base operation, as a cost floor.
//! * `mix`: chain-scanning resolution and execution.
//! * `d2`: dispatcher walk and execution.
//! * `static`: a compile-time composed stack's direct method call.
//!
//! Output is headerless CSV, `engine,depth,ns_per_call`, engines in the
//! order above, depths in the order given. Static stacks exist only at the
//! precompiled depths; asking for another depth is a configuration error.
//! Iterations run sequentially on one thread so the timer sees nothing but
//! the calls.

use std::hint::black_box;
use std::time::Instant;

use garnish_core::synthetic::{self, EventLog, F1};
use garnish_core::{d2dispatch, mixdispatch, Component, Error};

pub const ENGINES: [&str; 4] = ["forward", "mix", "d2", "static"];
pub const STATIC_DEPTHS: [usize; 6] = [1, 2, 3, 4, 8, 16];

const WARMUP_CALLS: u64 = 100;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub depths: Vec<usize>,
    pub iters: u64,
}

pub fn parse_depths(text: &str) -> Result<Vec<usize>, Error> {
    let depths: Vec<usize> = text
        .split(',')
        .map(|token| {
            let token = token.trim();
            match token.parse::<usize>() {
                Ok(depth) if depth >= 1 => Ok(depth),
                _ => Err(Error::Config(format!("invalid depth: '{token}'"))),
            }
        })
        .collect::<Result<_, _>>()?;
    if depths.is_empty() {
        return Err(Error::Config("no depths given".to_string()));
    }
    Ok(depths)
}

/// Run every engine at every depth and return the CSV text.
pub fn run_bench(config: &BenchConfig) -> Result<String, Error> {
    if config.iters == 0 {
        return Err(Error::Config("iterations must be at least 1".to_string()));
    }
    for depth in &config.depths {
        if !STATIC_DEPTHS.contains(depth) {
            return Err(Error::Config(format!(
                "static stacks are precompiled for depths {STATIC_DEPTHS:?}; got {depth}"
            )));
        }
    }

    let mut csv = String::new();
    for engine in ENGINES {
        for &depth in &config.depths {
            let ns = measure(engine, depth, config.iters)?;
            csv.push_str(&format!("{engine},{depth},{ns:.3}\n"));
        }
    }
    Ok(csv)
}

fn time_calls(iters: u64, mut call: impl FnMut()) -> f64 {
    for _ in 0..WARMUP_CALLS {
        call();
    }
    let started = Instant::now();
    for _ in 0..iters {
        call();
    }
    started.elapsed().as_nanos() as f64 / iters as f64
}

fn measure(engine: &str, depth: usize, iters: u64) -> Result<f64, Error> {
    match engine {
        "forward" => {
            let mut chain: Component = synthetic::bench_chain(depth).into();
            Ok(time_calls(iters, || {
                black_box(chain.operation().unwrap());
            }))
        }
        "mix" => {
            let registry = synthetic::registry(&EventLog::new());
            let mut chain: Component = synthetic::bench_chain(depth).into();
            Ok(time_calls(iters, || {
                black_box(mixdispatch::invoke(&mut chain, F1, &[], registry.table()).unwrap());
            }))
        }
        "d2" => {
            let registry = synthetic::registry(&EventLog::new());
            let mut chain = synthetic::bench_chain(depth);
            let dispatcher = d2dispatch::make_dispatcher(registry.table(), F1, Vec::new())?;
            Ok(time_calls(iters, || {
                black_box(d2dispatch::apply(&mut chain, &dispatcher, registry.table()).unwrap());
            }))
        }
        "static" => measure_static(depth, iters),
        other => Err(Error::Config(format!("unknown engine: {other}"))),
    }
}

fn measure_static(depth: usize, iters: u64) -> Result<f64, Error> {
    macro_rules! run {
        ($ctor:path) => {{
            let mut stack = $ctor();
            Ok(time_calls(iters, || {
                black_box(stack.f1());
            }))
        }};
    }
    match depth {
        1 => run!(synthetic::bench_stack_1),
        2 => run!(synthetic::bench_stack_2),
        3 => run!(synthetic::bench_stack_3),
        4 => run!(synthetic::bench_stack_4),
        8 => run!(synthetic::bench_stack_8),
        16 => run!(synthetic::bench_stack_16),
        other => Err(Error::Config(format!(
            "static stacks are precompiled for depths {STATIC_DEPTHS:?}; got {other}"
        ))),
    }
}
