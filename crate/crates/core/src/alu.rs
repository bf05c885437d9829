// Copyright 2026 The unum-rs Authors
// SPDX-License-Identifier: Apache-2.0

//! Functional model of an instruction-driven ubound ALU.
//!
//! The model holds a 1024-slot instruction memory, a file of 32 registers of
//! 128 bits each and is driven by four memory-controller commands:
//!
//! ```text
//! WI <addr> <opcode> <rd>,<rs1>[,<rs2>]   write instruction slot
//! WR <reg> <32 hex digits>                write a register image
//! RR <reg>                                read a register image
//! RUN <n>                                 run the program n times
//! ```
//!
//! Execution is one instruction at a time. Adds and subtracts are followed by
//! an implicit optimize; unify only happens on an explicit `UNIFY`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::arith::{negate, raw_add};
use crate::codec::{PackedUbound, RegisterImage};
use crate::compress::{optimize, unify};
use crate::env::Environment;
use crate::error::UnumError;

pub const IMEM_SIZE: usize = 1024;
pub const NUM_REGS: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Opcode {
    Uadd,
    Usub,
    Unify,
    Optimize,
    Nop,
}

impl Opcode {
    pub const ALL: [Opcode; 5] = [Opcode::Uadd, Opcode::Usub, Opcode::Unify, Opcode::Optimize, Opcode::Nop];

    /// Cycles charged per instruction.
    pub fn latency(self) -> u64 {
        match self {
            Opcode::Uadd | Opcode::Usub => 2,
            Opcode::Unify | Opcode::Optimize | Opcode::Nop => 1,
        }
    }

    /// Number of source registers read.
    pub fn sources(self) -> usize {
        match self {
            Opcode::Uadd | Opcode::Usub => 2,
            Opcode::Unify | Opcode::Optimize => 1,
            Opcode::Nop => 0,
        }
    }

    pub fn mnemonic(self) -> &'static str {
        match self {
            Opcode::Uadd => "UADD",
            Opcode::Usub => "USUB",
            Opcode::Unify => "UNIFY",
            Opcode::Optimize => "OPTIMIZE",
            Opcode::Nop => "NOP",
        }
    }
}

impl fmt::Display for Opcode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.mnemonic())
    }
}

impl FromStr for Opcode {
    type Err = AluError;

    fn from_str(s: &str) -> Result<Self, AluError> {
        Opcode::ALL
            .into_iter()
            .find(|op| op.mnemonic().eq_ignore_ascii_case(s))
            .ok_or_else(|| AluError::Syntax(format!("unknown opcode {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Instruction {
    pub op: Opcode,
    pub rd: u8,
    pub rs1: u8,
    pub rs2: u8,
}

impl Instruction {
    pub const NOP: Instruction = Instruction { op: Opcode::Nop, rd: 0, rs1: 0, rs2: 0 };

    pub fn new(op: Opcode, rd: u8, rs1: u8, rs2: u8) -> Result<Self, AluError> {
        for r in [rd, rs1, rs2] {
            check_reg(r as usize)?;
        }
        Ok(Instruction { op, rd, rs1, rs2 })
    }
}

impl fmt::Display for Instruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.op.sources() {
            0 => write!(f, "{}", self.op),
            1 => write!(f, "{} r{},r{}", self.op, self.rd, self.rs1),
            _ => write!(f, "{} r{},r{},r{}", self.op, self.rd, self.rs1, self.rs2),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AluError {
    #[error("instruction address {0} out of range (0..{IMEM_SIZE})")]
    AddressOutOfRange(usize),
    #[error("register {0} out of range (0..{NUM_REGS})")]
    RegisterOutOfRange(usize),
    #[error("{0}")]
    Syntax(String),
    #[error("pc {pc}: register r{reg} read before it was written")]
    EmptyRegister { pc: usize, reg: u8 },
    #[error("pc {pc}: register r{reg}: {source}")]
    BadOperand { pc: usize, reg: u8, source: UnumError },
    #[error("pc {pc}: {source}")]
    Execution { pc: usize, source: UnumError },
}

/// An [`AluError`] tagged with the 1-based script line that caused it.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {source}")]
pub struct ScriptError {
    pub line: usize,
    pub source: AluError,
}

fn check_reg(r: usize) -> Result<(), AluError> {
    if r < NUM_REGS {
        Ok(())
    } else {
        Err(AluError::RegisterOutOfRange(r))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    WriteInstruction { addr: usize, instr: Instruction },
    WriteRegister { reg: usize, image: RegisterImage },
    ReadRegister { reg: usize },
    Run { times: u64 },
}

/// Output of a command that produces one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Response {
    pub reg: usize,
    pub image: RegisterImage,
}

impl fmt::Display for Response {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r{}={}", self.reg, self.image)
    }
}

fn parse_reg(s: &str) -> Result<usize, AluError> {
    let t = s.trim();
    let digits = t.strip_prefix(['r', 'R']).unwrap_or(t);
    let r = digits.parse::<usize>().map_err(|_| AluError::Syntax(format!("bad register {t:?}")))?;
    check_reg(r)?;
    Ok(r)
}

fn parse_num<T: FromStr>(s: &str, what: &str) -> Result<T, AluError> {
    s.parse().map_err(|_| AluError::Syntax(format!("bad {what} {s:?}")))
}

impl FromStr for Command {
    type Err = AluError;

    /// Parses one non-empty, comment-free script line.
    fn from_str(line: &str) -> Result<Self, AluError> {
        let mut words = line.split_whitespace();
        let head = words.next().unwrap_or_default().to_ascii_uppercase();
        let rest: Vec<&str> = words.collect();
        let arity = |n: usize| {
            if rest.len() == n {
                Ok(())
            } else {
                Err(AluError::Syntax(format!("{head} takes {n} argument(s), got {}", rest.len())))
            }
        };
        match head.as_str() {
            "WI" => {
                let addr: usize = parse_num(rest.first().copied().unwrap_or_default(), "address")?;
                if rest.len() < 2 {
                    return Err(AluError::Syntax("WI needs an address and an opcode".into()));
                }
                let op: Opcode = rest[1].parse()?;
                let regs: Vec<usize> = rest[2..]
                    .join("")
                    .split(',')
                    .filter(|s| !s.is_empty())
                    .map(parse_reg)
                    .collect::<Result<_, _>>()?;
                // Unary ops ignore rs2 and NOP ignores everything.
                let ok = match op {
                    Opcode::Nop => regs.len() <= 3,
                    Opcode::Unify | Opcode::Optimize => (2..=3).contains(&regs.len()),
                    Opcode::Uadd | Opcode::Usub => regs.len() == 3,
                };
                if !ok {
                    return Err(AluError::Syntax(format!("wrong register count for {op}: {}", regs.len())));
                }
                if addr >= IMEM_SIZE {
                    return Err(AluError::AddressOutOfRange(addr));
                }
                let r = |i: usize| regs.get(i).copied().unwrap_or(0) as u8;
                Ok(Command::WriteInstruction { addr, instr: Instruction::new(op, r(0), r(1), r(2))? })
            }
            "WR" => {
                arity(2)?;
                let reg = parse_reg(rest[0])?;
                let image = rest[1].parse().map_err(|e: UnumError| AluError::Syntax(e.to_string()))?;
                Ok(Command::WriteRegister { reg, image })
            }
            "RR" => {
                arity(1)?;
                Ok(Command::ReadRegister { reg: parse_reg(rest[0])? })
            }
            "RUN" => {
                arity(1)?;
                Ok(Command::Run { times: parse_num(rest[0], "repeat count")? })
            }
            _ => Err(AluError::Syntax(format!("unknown command {head:?}"))),
        }
    }
}

/// Parses a script into commands with their 1-based line numbers.
pub fn parse_script(text: &str) -> Result<Vec<(usize, Command)>, ScriptError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or_default().trim();
        if line.is_empty() {
            continue;
        }
        let cmd = line.parse().map_err(|source| ScriptError { line: i + 1, source })?;
        out.push((i + 1, cmd));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AluState {
    env: Environment,
    imem: Vec<Instruction>,
    len: usize,
    regs: [RegisterImage; NUM_REGS],
    pc: usize,
    cycles: u64,
}

impl Default for AluState {
    fn default() -> Self {
        AluState::new(Environment::ALU)
    }
}

impl AluState {
    pub fn new(env: Environment) -> Self {
        AluState {
            env,
            imem: vec![Instruction::NOP; IMEM_SIZE],
            len: 0,
            regs: [RegisterImage::EMPTY; NUM_REGS],
            pc: 0,
            cycles: 0,
        }
    }

    pub fn env(&self) -> Environment {
        self.env
    }

    /// The loaded program: slots up to the highest one written.
    pub fn program(&self) -> &[Instruction] {
        &self.imem[..self.len]
    }

    pub fn registers(&self) -> &[RegisterImage; NUM_REGS] {
        &self.regs
    }

    pub fn register(&self, r: usize) -> Option<RegisterImage> {
        self.regs.get(r).copied()
    }

    pub fn pc(&self) -> usize {
        self.pc
    }

    /// Total cycles charged since construction.
    pub fn cycles(&self) -> u64 {
        self.cycles
    }

    pub fn exec_command(&mut self, cmd: &Command) -> Result<Option<Response>, AluError> {
        match *cmd {
            Command::WriteInstruction { addr, instr } => {
                if addr >= IMEM_SIZE {
                    return Err(AluError::AddressOutOfRange(addr));
                }
                for r in [instr.rd, instr.rs1, instr.rs2] {
                    check_reg(r as usize)?;
                }
                self.imem[addr] = instr;
                self.len = self.len.max(addr + 1);
                Ok(None)
            }
            Command::WriteRegister { reg, image } => {
                check_reg(reg)?;
                if !image.is_empty() {
                    image.to_ubound(self.env).map_err(|source| AluError::BadOperand {
                        pc: self.pc,
                        reg: reg as u8,
                        source,
                    })?;
                }
                self.regs[reg] = image;
                Ok(None)
            }
            Command::ReadRegister { reg } => {
                check_reg(reg)?;
                Ok(Some(Response { reg, image: self.regs[reg] }))
            }
            Command::Run { times } => {
                for _ in 0..times {
                    self.run_once()?;
                }
                Ok(None)
            }
        }
    }

    /// Runs every command of a script, collecting `RR` output.
    pub fn run_script(&mut self, text: &str) -> Result<Vec<Response>, ScriptError> {
        let mut out = Vec::new();
        for (line, cmd) in parse_script(text)? {
            if let Some(r) = self.exec_command(&cmd).map_err(|source| ScriptError { line, source })? {
                out.push(r);
            }
        }
        Ok(out)
    }

    fn operand(&self, reg: u8) -> Result<PackedUbound, AluError> {
        let image = self.regs[reg as usize];
        if image.is_empty() {
            return Err(AluError::EmptyRegister { pc: self.pc, reg });
        }
        image.to_ubound(self.env).map_err(|source| AluError::BadOperand { pc: self.pc, reg, source })
    }

    fn run_once(&mut self) -> Result<(), AluError> {
        self.pc = 0;
        while self.pc < self.len {
            let ins = self.imem[self.pc];
            let result = match ins.op {
                Opcode::Nop => None,
                Opcode::Uadd | Opcode::Usub => {
                    let x = self.operand(ins.rs1)?;
                    let mut y = self.operand(ins.rs2)?;
                    if ins.op == Opcode::Usub {
                        y = negate(&y);
                    }
                    let sum =
                        raw_add(&x, &y).map_err(|source| AluError::Execution { pc: self.pc, source })?;
                    Some(optimize(&sum))
                }
                Opcode::Optimize => Some(optimize(&self.operand(ins.rs1)?)),
                Opcode::Unify => Some(unify(&self.operand(ins.rs1)?)),
            };
            if let Some(v) = result {
                self.regs[ins.rd as usize] = RegisterImage::from_ubound(&v);
            }
            self.cycles += ins.op.latency();
            self.pc += 1;
        }
        self.pc = 0;
        Ok(())
    }
}

/// Evaluates a program directly on library values. `regs[i] = None` marks an
/// unwritten register.
pub fn evaluate(program: &[Instruction], regs: &mut [Option<PackedUbound>]) -> Result<(), AluError> {
    for (pc, ins) in program.iter().enumerate() {
        let get = |r: u8| regs[r as usize].ok_or(AluError::EmptyRegister { pc, reg: r });
        let exec = |source| AluError::Execution { pc, source };
        let v = match ins.op {
            Opcode::Nop => continue,
            Opcode::Uadd => crate::arith::add(&get(ins.rs1)?, &get(ins.rs2)?).map_err(exec)?,
            Opcode::Usub => crate::arith::sub(&get(ins.rs1)?, &get(ins.rs2)?).map_err(exec)?,
            Opcode::Optimize => optimize(&get(ins.rs1)?),
            Opcode::Unify => unify(&get(ins.rs1)?),
        };
        regs[ins.rd as usize] = Some(v);
    }
    Ok(())
}
