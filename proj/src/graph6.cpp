#include "proxim/graph6.hpp"

#include <sstream>

#include "proxim/errors.hpp"

namespace proxim {

namespace {

constexpr char bias = 63;

int sextet(char c) {
  if (c < 63 || c > 126) throw FormatError("graph6: byte " + std::to_string(static_cast<int>(c)) + " outside [63,126]");
  return c - bias;
}

} // namespace

Graph parse_graph6(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.remove_suffix(1);
  if (line.empty()) throw FormatError("graph6: empty line");

  std::size_t n = 0;
  std::size_t pos = 0;
  if (line[0] == '~') {
    if (line.size() >= 2 && line[1] == '~')
      throw FormatError("graph6: eight-byte size prefix is not supported");
    if (line.size() < 4) throw FormatError("graph6: truncated size prefix");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(line[i]));
    if (n < 63) throw FormatError("graph6: long size prefix used for order " + std::to_string(n));
    pos = 4;
  } else {
    n = static_cast<std::size_t>(sextet(line[0]));
    pos = 1;
  }
  if (n == 0) throw FormatError("graph6: order 0 graphs are not supported");

  const std::size_t pairs = n * (n - 1) / 2;
  const std::size_t bytes = (pairs + 5) / 6;
  if (line.size() - pos != bytes)
    throw FormatError("graph6: expected " + std::to_string(bytes) + " data bytes for order " + std::to_string(n) +
                      ", got " + std::to_string(line.size() - pos));

  std::vector<Edge> edges;
  std::size_t bit = 0;
  VertexId i = 0;
  VertexId j = 1;
  for (std::size_t b = 0; b < bytes; ++b) {
    const int value = sextet(line[pos + b]);
    for (int k = 5; k >= 0; --k, ++bit) {
      const bool set = (value >> k) & 1;
      if (bit >= pairs) {
        if (set) throw FormatError("graph6: nonzero padding bits");
        continue;
      }
      // Column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
      if (set) edges.push_back({i, j});
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_edge_list(n, edges);
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > graph6_max_order) throw InvalidArgument("graph6: order " + std::to_string(n) + " too large");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + bias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + bias));
  }
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<int> data((pairs + 5) / 6, 0);
  for (const Edge& e : g.edges()) {
    const std::size_t bit = static_cast<std::size_t>(e.v) * (e.v - 1) / 2 + e.u;
    data[bit / 6] |= 1 << (5 - bit % 6);
  }
  for (int value : data) out.push_back(static_cast<char>(value + bias));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const std::exception& e) {
      throw FormatError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  auto next_line = [&](const char* what) {
    while (std::getline(in, line))
      if (!line.empty() && line[0] != '#') return;
    throw FormatError(std::string("edge list: missing ") + what);
  };
  next_line("header");
  std::istringstream header(line);
  std::size_t n = 0;
  std::size_t m = 0;
  if (!(header >> n >> m)) throw FormatError("edge list: header must be 'n m'");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    next_line("edge line");
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    if (!(row >> u >> v) || u < 0 || v < 0) throw FormatError("edge list: bad edge line '" + line + "'");
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  try {
    return Graph::from_edge_list(n, edges);
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("edge list: ") + e.what());
  }
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

} // namespace proxim
