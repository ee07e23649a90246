#![no_std]
//! Exact computations in finitely presented additive categories.

extern crate alloc;

pub mod abgrp;
pub mod catops;
pub mod muro;
pub mod prescat;
pub mod obstruct;
