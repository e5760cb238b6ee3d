//! Times each identity's slice of the default verification grid and
//! asserts zero Unequal verdicts along the way.
//!
//!     cargo run --release -p fibbern-core --example profile_grid

use fibbern_core::identities::{verify_grid, EvalContext, GridSpec, IdentityId};
use std::time::Instant;

fn main() {
    let ctx = EvalContext::for_default_grid();
    let grid = GridSpec::default();
    let mut total = std::time::Duration::ZERO;
    for id in IdentityId::ALL {
        let t = Instant::now();
        let r = verify_grid(&ctx, &[id], &grid, 1);
        let el = t.elapsed();
        total += el;
        println!(
            "{:<12} {:>8} verdicts  {:>12.3?}",
            id.tag(),
            r.records.len(),
            el
        );
        assert_eq!(r.unequal(), 0, "{} has Unequal verdicts", id.tag());
    }
    println!("{:<12} {:>8}          {:>12.3?}", "total", "", total);
}
