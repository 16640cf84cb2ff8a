//! Counting engine: exact table-based counts, enumeration, uniform sampling,
//! multiplicity-based counting, restricted compositions and step-sum
//! probabilities.

mod compositions;
mod enumerate;
mod multinomial;
mod probability;
mod sample;
mod table;

pub use compositions::{compositions_with_parts, count_independent, matrix_compositions};
pub use enumerate::{enumerate, enumerate_capped, DEFAULT_ENUMERATION_CAP};
pub use multinomial::count_multinomial;
pub use probability::prob_sum;
pub use sample::{sample_uniform, Sampler};
pub use table::{count, count_with_parts, parts_table, CountTable, TableCache};
