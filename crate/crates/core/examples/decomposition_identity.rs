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


//! Splits the Laplacian with the rail swap and checks that the two
//! reduced blocks account for the whole characteristic polynomial.
//!
//!     cargo run --example decomposition_identity -- 4

use pentakirch::decomposition::{
    decomposition_from_graph, extract_vieta, kirchhoff_from_vieta, product_identity_holds,
};
use pentakirch::spectral::spectrum_union_check;
use pentakirch::{GraphFamily, Variant};

fn main() -> pentakirch::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    for variant in Variant::ALL {
        let g = GraphFamily::new(variant, n)?.build();
        let pair = decomposition_from_graph(&g)?;
        println!("{variant} n={n}: L_A order {}, L_S order {}", pair.l_a.order(), pair.l_s.order());
        println!("  char(L) = char(L_A) char(L_S): {}", product_identity_holds(&pair)?);
        let (a, s) = pair.to_f64();
        let union = spectrum_union_check(&g, (&a, &s))?;
        println!("  spectrum union max gap: {:.2e}", union.max_gap);
        let v = extract_vieta(&pair)?;
        println!(
            "  alpha_3n-1 = {}, alpha_3n-2 = {}, beta_2n-1 = {}, det L_S = {}",
            v.alpha_3n_minus_1, v.alpha_3n_minus_2, v.beta_2n_minus_1, v.det_ls
        );
        println!("  Kf from coefficients: {}", kirchhoff_from_vieta(n, &v));
        let flipped = pair.with_corner_sign_flipped();
        println!("  with the L_S corner sign flipped: {}", product_identity_holds(&flipped)?);
    }
    Ok(())
}
