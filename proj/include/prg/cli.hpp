#pragma once

#include <iosfwd>
#include <string>

#include "prg/json_io.hpp"

namespace prg {

/**
 * Spec literal grammar: "k:a:bc", e.g. "8:3:13" for <V_{8,3}, rho_13>;
 * "bb" encodes the cyclic case rho_bb = I. Named aliases (case
 * insensitive): clifford (4:3:13), clifford+t (8:3:13), and the single
 * gates X, Y, Z, S, T (cyclic groups <gate>) and H ({I, H}).
 */
GroupSpec parse_spec_literal(const std::string& text);

/// A word over the fixed gate alphabet X Y Z S T H V1 V2 V3 r12 r13 r23
/// (V1..V3 are the quarter turns V_{4,a}), each optionally daggered with
/// a trailing apostrophe; tokens separated by whitespace. Returns the
/// exact product in Q(w_ambient); ambient must be a multiple of 8.
Mat2 parse_gate_word(const std::string& text, unsigned ambient);

/// Exit codes: 0 decided, 1 failed verification, 2 undetermined or
/// cap exceeded, 64 parse/usage error, 65 domain error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace prg
