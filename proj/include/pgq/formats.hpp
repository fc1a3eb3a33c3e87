#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pgq {

/// Contents of a GRASSMAP file: a line map between PG(n,q) and PG(tn,tq),
/// `dual` marking maps meant to be read into the dual of the target.
struct MapFile {
  int n = 0, q = 0;
  int tn = 0, tq = 0;
  bool dual = false;
  std::vector<int> image;
  bool operator==(const MapFile&) const = default;
};

std::string serialize_map(const MapFile& f);

/// Strict inverse of serialize_map. Line counts and id ranges are checked
/// against the header. Throws ParseError.
MapFile parse_map(std::string_view text);

}  // namespace pgq
