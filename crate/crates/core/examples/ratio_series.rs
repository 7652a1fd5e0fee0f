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


//! `W/Kf` as n grows, for both families.
//!
//!     cargo run --example ratio_series -- 200

use pentakirch::closed_forms::{is_strictly_increasing, ratio_series};
use pentakirch::Variant;

fn main() -> pentakirch::Result<()> {
    let n_max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(99);
    for variant in Variant::ALL {
        let points = ratio_series(variant, n_max)?;
        for p in points.iter().filter(|p| p.n.is_power_of_two() || p.n == n_max) {
            println!("{variant:>9} n={:<5} W/Kf = {:.11}  gap to 3 = {:.3e}", p.n, p.ratio, 3.0 - p.ratio);
        }
        println!("{variant:>9} strictly increasing: {}", is_strictly_increasing(&points));
    }
    Ok(())
}
