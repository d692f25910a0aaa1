//! Reference implementations used as oracles by the test suites.
//!
//! Everything here is written for clarity and independence, not speed: the
//! AES-GCM reference is a straight textbook transcription with a computed
//! S-box, the paging simulator tracks pages with plain maps, and the search
//! helpers are brute force. None of it shares code with the engine crates.

pub mod gcmref;
pub mod pagesim;
pub mod search;
pub mod vectors;

pub fn unhex(s: &str) -> Vec<u8> {
    hex::decode(s).expect("valid hex fixture")
}
