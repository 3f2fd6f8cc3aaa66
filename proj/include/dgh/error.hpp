#pragma once

#include <stdexcept>
#include <string>

namespace dgh {

// Error codes; the C API maps these onto dgh_status values.
enum class Errc {
  parse = 1,
  self_loop,
  unknown_endpoint,
  duplicate_vertex,
  unknown_vertex,
  not_total,
  edge_violation,
  domain_mismatch,
  bad_partition,
  label_collision,
  empty_digraph,
  invalid_restriction,
  not_a_subgroup,
  ill_defined,
  target_mismatch,
  chain_map_violation,
  path_explosion,
  io,
  internal,
};

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& what) : std::runtime_error(what), code(c) {}
};

[[noreturn]] inline void fail(Errc c, const std::string& what) { throw Error(c, what); }

}  // namespace dgh
