//! Exact computation of the `sl_k` specialization of the HOMFLYPT invariant
//! for oriented links and (1, k-1)-labeled tangles, via an intertwiner
//! ("web") calculus over `Z[q, q^-1]`, with machine verification of the
//! underlying algebraic identities: quantum-group Serre relations, the five
//! MOY graph relations, the Grothendieck-level crossing identities, and the
//! Reidemeister moves.
//!
//! Module map:
//! - [`laurent`]: exact arithmetic in `Z[q, q^-1]` and quantum combinatorics.
//! - [`qrep`]: `U_q(sl_k)` generators acting on tensor products of exterior
//!   powers of the vector representation; weight blocks; Serre verification.
//! - [`web`]: the elementary intertwiners (inclusions, projections, merges,
//!   splits, cups, caps) as sparse matrices, the calibrated convention table,
//!   and the MOY relation checks.
//! - [`moyeval`]: Morse-position diagrams built from slices, composition to
//!   web morphisms, and evaluation of closed crossing-free diagrams.
//! - [`skein`]: crossing operators, the bracket state sum, the normalized
//!   invariant, Grothendieck crossing classes, braid closures, the naive
//!   skein oracle, and the Reidemeister/skein verification suites.
//! - [`grothcheck`]: Grothendieck-module bookkeeping (rank/block counts,
//!   per-block commutator multiplicities, projection shadows).
//! - [`report`]: the shared JSON report schema used by all suites.

pub mod grothcheck;
pub mod laurent;
pub mod moyeval;
pub mod qrep;
pub mod report;
pub mod skein;
pub mod web;
