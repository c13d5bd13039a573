#include "steiner/families.hpp"

#include <algorithm>

namespace steiner {

namespace {

struct EdgeBuilder {
  std::vector<std::pair<int, int>> edges;
  int next = 0;

  int fresh() { return next++; }
  void link(int u, int v) { edges.emplace_back(u, v); }

  // Pendant path of `len` new vertices chained off `root`; returns nothing,
  // labels advance in order.
  void path_from(int root, int len) {
    int prev = root;
    for (int i = 0; i < len; ++i) {
      int v = fresh();
      link(prev, v);
      prev = v;
    }
  }
};

std::optional<std::string> fail(const std::string& text) { return text; }

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::H1: return "H1";
    case Family::H2: return "H2";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
    case Family::T: return "T";
    case Family::Delta: return "DELTA";
    case Family::DeltaPrime: return "DELTA_PRIME";
    case Family::G1: return "G1";
    case Family::G2: return "G2";
    case Family::G3: return "G3";
  }
  return "?";
}

std::optional<Family> family_from_string(const std::string& name) {
  std::string up;
  for (char ch : name) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  for (Family f : {Family::H1, Family::H2, Family::H3, Family::H4, Family::T,
                   Family::Delta, Family::DeltaPrime, Family::G1, Family::G2, Family::G3})
    if (up == family_name(f)) return f;
  return std::nullopt;
}

int family_arity(Family f) {
  switch (f) {
    case Family::H2: return 3;
    case Family::H3:
    case Family::H4: return 2;
    default: return 4;
  }
}

std::optional<std::string> check_params(const FamilyParams& p) {
  const int a = p.a, b = p.b, c = p.c, d = p.d, n = p.n;
  if (a < 0 || b < 0 || c < 0 || d < 0) return fail("parameters must be non-negative");
  int arity = family_arity(p.family);
  if (arity < 4 && d != 0) return fail("parameter d unused by this family, must be 0");
  if (arity < 3 && c != 0) return fail("parameter c unused by this family, must be 0");
  switch (p.family) {
    case Family::H1:
      if (n < 5) return fail("H1 requires n >= 5");
      if (!(a <= b && b <= c && c <= d)) return fail("H1 requires a <= b <= c <= d");
      if (d < 1) return fail("H1 requires d >= 1");
      if (a + b + c + d != n - 4) return fail("H1 requires a+b+c+d = n-4");
      break;
    case Family::H2:
      if (n < 5) return fail("H2 requires n >= 5");
      if (a > b) return fail("H2 requires a <= b");
      if (a + b + c != n - 4) return fail("H2 requires a+b+c = n-4");
      break;
    case Family::H3:
      if (n < 5) return fail("H3 requires n >= 5");
      if (a > b) return fail("H3 requires a <= b");
      if (b < 1) return fail("H3 requires b >= 1");
      if (a + b != n - 4) return fail("H3 requires a+b = n-4");
      break;
    case Family::H4:
      if (n < 5) return fail("H4 requires n >= 5");
      if (a > b) return fail("H4 requires a <= b");
      if (b < 1) return fail("H4 requires b >= 1");
      if (a + b != n - 4) return fail("H4 requires a+b = n-4");
      break;
    case Family::T:
      if (n < 5) return fail("T requires n >= 5");
      if (a + b + c + d > n - 1) return fail("T requires a+b+c+d <= n-1");
      break;
    case Family::Delta:
      if (n < 5) return fail("DELTA requires n >= 5");
      if (a + b + c + d > n - 2) return fail("DELTA requires a+b+c+d <= n-2");
      if (a + b + c > n - 3) return fail("DELTA requires a+b+c <= n-3");
      break;
    case Family::DeltaPrime:
      if (n < 5) return fail("DELTA_PRIME requires n >= 5");
      if (a + b + c + d > n - 3) return fail("DELTA_PRIME requires a+b+c+d <= n-3");
      if (a + b + c > n - 4) return fail("DELTA_PRIME requires a+b+c <= n-4");
      if (b + c + d > n - 4) return fail("DELTA_PRIME requires b+c+d <= n-4");
      break;
    case Family::G1:
    case Family::G2:
    case Family::G3:
      if (n < 4) return fail("G families require n >= 4");
      if (a + b + c + d != n - 4) return fail("G families require a+b+c+d = n-4");
      break;
  }
  return std::nullopt;
}

Graph generate_family(const FamilyParams& p) {
  if (auto bad = check_params(p)) throw std::invalid_argument(*bad);
  const int a = p.a, b = p.b, c = p.c, d = p.d, n = p.n;
  EdgeBuilder eb;

  switch (p.family) {
    case Family::H1: {
      int u[4];
      for (int& v : u) v = eb.fresh();
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) eb.link(u[i], u[j]);
      const int sizes[4] = {a, b, c, d};
      for (int i = 0; i < 4; ++i)
        for (int s = 0; s < sizes[i]; ++s) eb.link(u[i], eb.fresh());
      break;
    }
    case Family::H2: {
      int u1 = eb.fresh(), u2 = eb.fresh(), u3 = eb.fresh(), u4 = eb.fresh();
      eb.link(u1, u2);
      eb.link(u1, u3);
      eb.link(u2, u3);
      eb.link(u2, u4);
      eb.link(u3, u4);
      for (int s = 0; s < a; ++s) eb.link(u2, eb.fresh());
      for (int s = 0; s < b; ++s) eb.link(u3, eb.fresh());
      for (int s = 0; s < c; ++s) {
        int z = eb.fresh();
        eb.link(u1, z);
        eb.link(u4, z);
      }
      break;
    }
    case Family::H3: {
      int u1 = eb.fresh(), u2 = eb.fresh(), u3 = eb.fresh(), u4 = eb.fresh();
      eb.link(u1, u2);
      eb.link(u2, u3);
      eb.link(u3, u4);
      eb.link(u4, u1);
      for (int s = 0; s < a; ++s) {
        int x = eb.fresh();
        eb.link(u1, x);
        eb.link(u3, x);
      }
      for (int s = 0; s < b; ++s) {
        int y = eb.fresh();
        eb.link(u2, y);
        eb.link(u4, y);
      }
      break;
    }
    case Family::H4: {
      int u1 = eb.fresh(), u2 = eb.fresh(), u3 = eb.fresh(), u4 = eb.fresh();
      eb.link(u3, u1);
      eb.link(u3, u2);
      eb.link(u3, u4);
      for (int s = 0; s < a; ++s) eb.link(u3, eb.fresh());
      for (int s = 0; s < b; ++s) {
        int y = eb.fresh();
        eb.link(u1, y);
        eb.link(u2, y);
        eb.link(u4, y);
      }
      break;
    }
    case Family::T: {
      int spine = n - b - c;
      for (int i = 0; i < spine; ++i) eb.fresh();
      for (int i = 0; i + 1 < spine; ++i) eb.link(i, i + 1);
      eb.path_from(a, b);                  // spine position a+1, 1-indexed
      eb.path_from(n - b - c - d - 1, c);  // spine position n-b-c-d
      break;
    }
    case Family::Delta: {
      int spine = n - b - c - 1;
      for (int i = 0; i < spine; ++i) eb.fresh();
      for (int i = 0; i + 1 < spine; ++i) eb.link(i, i + 1);
      int apex = eb.fresh();  // triangle over the spine edge at the branch point
      eb.link(apex, a);
      eb.link(apex, a + 1);
      eb.path_from(apex, b);
      eb.path_from(spine - d - 1, c);
      break;
    }
    case Family::DeltaPrime: {
      int spine = n - b - c - 2;
      for (int i = 0; i < spine; ++i) eb.fresh();
      for (int i = 0; i + 1 < spine; ++i) eb.link(i, i + 1);
      int left = eb.fresh();
      eb.link(left, a);
      eb.link(left, a + 1);
      eb.path_from(left, b);
      int right = eb.fresh();
      eb.link(right, spine - d - 1);
      eb.link(right, spine - d - 2);
      eb.path_from(right, c);
      break;
    }
    case Family::G1:
    case Family::G2:
    case Family::G3: {
      int u[4];
      for (int& v : u) v = eb.fresh();
      if (p.family == Family::G1) {
        for (int i = 0; i < 4; ++i)
          for (int j = i + 1; j < 4; ++j) eb.link(u[i], u[j]);
      } else if (p.family == Family::G2) {
        eb.link(u[0], u[1]);
        eb.link(u[1], u[2]);
        eb.link(u[2], u[3]);
        eb.link(u[3], u[0]);
      } else {
        for (int i = 0; i < 4; ++i)
          for (int j = i + 1; j < 4; ++j)
            if (!(i == 0 && j == 3)) eb.link(u[i], u[j]);
      }
      const int lens[4] = {a, b, c, d};
      for (int i = 0; i < 4; ++i) eb.path_from(u[i], lens[i]);
      break;
    }
  }
  return Graph(n, eb.edges);
}

std::vector<FamilyParams> sweep_params(Family f, int n) {
  std::vector<FamilyParams> out;
  int arity = family_arity(f);
  int hi_b = arity >= 2 ? n : 0, hi_c = arity >= 3 ? n : 0, hi_d = arity >= 4 ? n : 0;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= hi_b; ++b)
      for (int c = 0; c <= hi_c; ++c)
        for (int d = 0; d <= hi_d; ++d) {
          FamilyParams p{f, a, b, c, d, n};
          if (!check_params(p)) out.push_back(p);
        }
  return out;
}

bool is_tree_with_at_most_4_leaves(const Graph& g) {
  if (g.order() == 0) return false;
  if (!is_connected(g) || g.edge_count() != static_cast<std::size_t>(g.order()) - 1)
    return false;
  int leaves = 0;
  for (int v = 0; v < g.order(); ++v) leaves += g.degree(v) == 1;
  return leaves <= 4;
}

}  // namespace steiner
