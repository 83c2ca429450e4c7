//! The JSON report envelope shared by every command.

use std::time::Instant;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const SCHEMA: &str = "report.v1";

/// The JSON schema of the envelope.
pub const SCHEMA_JSON: &str = include_str!("../data/report.v1.json");

/// `sha256:<hex>` of the command's primary input.
pub fn digest(bytes: &[u8]) -> String {
    let hash = Sha256::digest(bytes);
    let hex: String = hash.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

/// CPU time consumed by the process so far, in milliseconds.
pub fn cpu_time_ms() -> u64 {
    let mut ts = libc::timespec { tv_sec: 0, tv_nsec: 0 };
    // SAFETY: `ts` is a valid out pointer for the duration of the call.
    let rc = unsafe { libc::clock_gettime(libc::CLOCK_PROCESS_CPUTIME_ID, &mut ts) };
    if rc != 0 {
        return 0;
    }
    ts.tv_sec as u64 * 1000 + ts.tv_nsec as u64 / 1_000_000
}

/// Wall and CPU clocks started together.
pub struct Stopwatch {
    wall: Instant,
    cpu_ms: u64,
}

impl Stopwatch {
    pub fn start() -> Self {
        Stopwatch {
            wall: Instant::now(),
            cpu_ms: cpu_time_ms(),
        }
    }

    pub fn timing(&self) -> Value {
        json!({
            "wall_ms": self.wall.elapsed().as_millis() as u64,
            "cpu_ms": cpu_time_ms().saturating_sub(self.cpu_ms),
        })
    }
}

/// Wraps a command result.
pub fn envelope(command: &str, input_digest: &str, seed: u64, watch: &Stopwatch, result: Value) -> Value {
    json!({
        "schema": SCHEMA,
        "command": command,
        "tool_version": env!("CARGO_PKG_VERSION"),
        "input_digest": input_digest,
        "seed": seed,
        "timing": watch.timing(),
        "result": result,
    })
}

/// Wraps an error with its stable code.
pub fn error_envelope(command: &str, code: &str, message: &str, exit_code: i32) -> Value {
    json!({
        "schema": SCHEMA,
        "command": command,
        "tool_version": env!("CARGO_PKG_VERSION"),
        "error": { "code": code, "message": message, "exit_code": exit_code },
    })
}

/// Removes the `timing` block so reports can be compared byte for byte.
pub fn strip_timing(mut report: Value) -> Value {
    if let Some(obj) = report.as_object_mut() {
        obj.remove("timing");
    }
    report
}
