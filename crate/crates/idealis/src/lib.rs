//! File formats, ring dispatch and subcommand bodies for the `idealis` CLI.

pub mod any;
pub mod codec;
pub mod commands;

use std::num::NonZeroUsize;
use std::thread;

use idealis_core::report::{classify, Bounds, StructureReport};
use idealis_core::{Error, Result};
use serde_json::Value;

pub use any::AnyRing;

/// Process exit status for an error: 2 for unsupported rings, 3 for
/// exhausted searches, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::UnsupportedRing(_) | Error::InvalidDescriptor(_) | Error::NotDedekind(_) => 2,
        Error::SearchExhausted { .. } | Error::BoundTooSmall { .. } => 3,
        _ => 1,
    }
}

/// Inline JSON when the argument looks like JSON, otherwise a file path.
pub fn load_json(arg: &str) -> Result<Value> {
    let text = if looks_inline(arg) {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| Error::Parse(format!("{arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{arg}: {e}")))
}

fn looks_inline(arg: &str) -> bool {
    let t = arg.trim_start();
    t.starts_with(['{', '[', '"', '-']) || t.starts_with(|c: char| c.is_ascii_digit())
}

/// `IDEALIS_THREADS` when set and positive, else the available parallelism.
pub fn thread_cap() -> usize {
    std::env::var("IDEALIS_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| thread::available_parallelism().map_or(1, NonZeroUsize::get))
}

/// Classifies each ring, at most `threads` at a time; results keep input order.
pub fn classify_all(rings: &[AnyRing], bounds: &Bounds, threads: usize) -> Vec<Result<StructureReport>> {
    let mut out = Vec::with_capacity(rings.len());
    for chunk in rings.chunks(threads.max(1)) {
        let results: Vec<Result<StructureReport>> = thread::scope(|s| {
            let handles: Vec<_> = chunk
                .iter()
                .map(|ring| s.spawn(move || with_ring!(ring, r => classify(r, bounds))))
                .collect();
            handles.into_iter().map(|h| h.join().expect("classifier thread panicked")).collect()
        });
        out.extend(results);
    }
    out
}
