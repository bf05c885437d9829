// Copyright 2026 The unum-rs Authors
// SPDX-License-Identifier: Apache-2.0

//! Operand generators shared by the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use unum::alu::{AluState, Command, Instruction, Opcode, IMEM_SIZE, NUM_REGS};
use unum::oracle::random_ubound;
use unum::{Environment, PackedUbound, RegisterImage};

/// Deterministic random ubounds in `env`.
pub fn operands(env: Environment, n: usize, seed: u64) -> Vec<PackedUbound> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| random_ubound(&mut rng, env)).collect()
}

/// An ALU with every register loaded and a full random program.
pub fn loaded_alu(env: Environment, seed: u64) -> AluState {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut alu = AluState::new(env);
    for reg in 0..NUM_REGS {
        let image = RegisterImage::from_ubound(&random_ubound(&mut rng, env));
        alu.exec_command(&Command::WriteRegister { reg, image }).unwrap();
    }
    let ops = [Opcode::Uadd, Opcode::Usub, Opcode::Unify, Opcode::Optimize];
    for addr in 0..IMEM_SIZE {
        let op = ops[rng.gen_range(0..ops.len())];
        let mut reg = || rng.gen_range(0..NUM_REGS as u8);
        let instr = Instruction::new(op, reg(), reg(), reg()).unwrap();
        alu.exec_command(&Command::WriteInstruction { addr, instr }).unwrap();
    }
    alu
}
