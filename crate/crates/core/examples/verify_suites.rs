// Runs every verification suite on A2 at small bounds and prints a summary.

use alcove_kit::{build_root_system, run_suite, Bounds, Result, Suite};

pub fn run_example() -> Result<()> {
    let a2 = build_root_system("A2".parse()?);
    let bounds = Bounds {
        max_length: 5,
        theorem_x: 4,
        theorem_y: 3,
        pair_length: 3,
        window_delta: 3,
        samples: 200,
    };
    for suite in Suite::ALL {
        let report = run_suite(&a2, suite, &bounds, 7)?;
        println!("{}", report.summary_line());
        if let Some(c) = report.first_counterexample() {
            println!("    e.g. {}", c.detail);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
