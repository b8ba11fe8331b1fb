// The guide in book/ is plain mdbook. Each chapter is pulled in here as a
// module doc so `cargo test --doc` runs its snippets.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}
#[doc = include_str!("../../../book/src/exact.md")]
pub mod exact {}
#[doc = include_str!("../../../book/src/partitions.md")]
pub mod partitions {}
#[doc = include_str!("../../../book/src/hall_littlewood.md")]
pub mod hall_littlewood {}
#[doc = include_str!("../../../book/src/counting.md")]
pub mod counting {}
#[doc = include_str!("../../../book/src/degree_sums.md")]
pub mod degree_sums {}
#[doc = include_str!("../../../book/src/verify.md")]
pub mod verify {}
