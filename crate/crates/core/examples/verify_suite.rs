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


//! Runs every cross-check through the library API.
//!
//!     PENTAKIRCH_THREADS=2 cargo run --example verify_suite

use pentakirch::parallel;
use pentakirch::verify::{run_all, VerifyOptions};

fn main() -> pentakirch::Result<()> {
    let opts = VerifyOptions { n_max: 10, ..VerifyOptions::default() };
    let outcomes = parallel::install(|| run_all(&opts))?;
    for o in &outcomes {
        println!("{o}");
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!("{failed} failed");
    std::process::exit(i32::from(failed > 0));
}
