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


//! Kirchhoff index from the closed form, the exact characteristic
//! polynomial, the Laplacian spectrum and the resistance matrix.
//!
//!     cargo run --example kirchhoff_three_ways -- 6

use num_traits::ToPrimitive;
use pentakirch::closed_forms::kirchhoff_closed;
use pentakirch::linalg::kirchhoff_exact;
use pentakirch::report::render_decimal;
use pentakirch::spectral::{kirchhoff_spectral, resistance_distances};
use pentakirch::{GraphFamily, Variant};

fn main() -> pentakirch::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    for variant in Variant::ALL {
        let family = GraphFamily::new(variant, n)?;
        let g = family.build();
        let closed = kirchhoff_closed(&family)?;
        let exact = kirchhoff_exact(&g)?;
        let spectral = kirchhoff_spectral(&g)?;
        let resistance = resistance_distances(&g)?.kirchhoff_index();
        println!("{variant} n={n}");
        println!("  closed      {closed} = {}", render_decimal(&closed, 6));
        println!("  exact       {exact} (equal: {})", exact == closed);
        println!("  spectral    {spectral:.10}");
        println!("  resistance  {resistance:.10}");
        let c = closed.to_f64().unwrap();
        println!("  max rel gap {:.2e}", ((spectral - c) / c).abs().max(((resistance - c) / c).abs()));
    }
    Ok(())
}
