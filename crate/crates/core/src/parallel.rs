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

//! Thread-pool sizing shared by the parallel commands.

use rayon::ThreadPoolBuilder;

/// Caps the number of worker threads when set to a positive integer.
pub const THREADS_ENV: &str = "PENTAKIRCH_THREADS";

pub fn thread_cap() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

/// Runs `f` inside a pool sized by [`THREADS_ENV`], or by the number of
/// available processors when it is unset.
pub fn install<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    let mut builder = ThreadPoolBuilder::new();
    if let Some(n) = thread_cap() {
        builder = builder.num_threads(n);
    }
    match builder.build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn install_runs_closure() {
        assert!(install(|| rayon::current_num_threads() > 0));
    }
}
