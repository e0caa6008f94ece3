#pragma once

// Proof file format, one parenthesized group per node:
//
//   node  := "(" TAG seq roles node* ")"
//   seq   := "(seq (" formula-list ") (" formula-list "))"
//   roles := "(ax I J)" | "(bot I)" | "(prin I)"
//          | "(prin I (lsplit I*) (rsplit I*))"
//          | "(prin I (sigma I*) (pi I*))"
//          | "(ctr I J)" | "(cut I J)"
//
// TAG is one of Init BotInit FixL FixR ImpL ImpR BoxRule CtrL Cut.
// Formula lists are comma separated.

#include <string>
#include <string_view>

#include "cfs/proof.hpp"

namespace cfs {

Proof read_proof(std::string_view text);
Proof read_proof_file(const std::string& path);

std::string write_proof(const Proof& p);
void write_proof_file(const Proof& p, const std::string& path);

}  // namespace cfs
