// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.


//! Spanning-tree counts: closed form against the Matrix-Tree determinant.
//!
//!     cargo run --example spanning_trees -- 12

use pentakirch::closed_forms::spanning_trees_closed;
use pentakirch::linalg::spanning_tree_count;
use pentakirch::spectral::spanning_trees_spectral;
use pentakirch::{GraphFamily, Variant};

fn main() -> pentakirch::Result<()> {
    let n_max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(12);
    println!("{:>3} {:>9} {:>40} {:>6} {:>12}", "n", "variant", "tau", "exact", "spectral");
    for n in 2..=n_max {
        for variant in Variant::ALL {
            let family = GraphFamily::new(variant, n)?;
            let g = family.build();
            let closed = spanning_trees_closed(&family);
            let same = closed == spanning_tree_count(&g);
            let spectral = spanning_trees_spectral(&g)?;
            println!("{n:>3} {variant:>9} {closed:>40} {same:>6} {spectral:>12.6e}");
        }
    }
    Ok(())
}
