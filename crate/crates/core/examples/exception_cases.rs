//! Replays the tables whose missing cell falls in an exception and checks
//! them against their expected values.
use bmsa::demo::{run_demo, Demo};

fn main() {
    for demo in [Demo::Caso2b, Demo::Casos1c2c] {
        let report = run_demo(demo);
        println!("== {} ({})", demo.name(), if report.passed() { "ok" } else { "MISMATCH" });
        for line in &report.lines {
            println!("{line}");
        }
        for m in &report.mismatches {
            println!("mismatch: {m}");
        }
    }
}
