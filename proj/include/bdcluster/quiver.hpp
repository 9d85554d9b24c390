#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "bdcluster/bdseed.hpp"

namespace bdc {

struct FrozenDirection : std::invalid_argument {
  explicit FrozenDirection(Label l)
      : std::invalid_argument("cannot mutate at frozen vertex " + l.to_string()), label(l) {}
  Label label;
};

struct NotLaurentPolynomial : std::runtime_error {
  NotLaurentPolynomial(Label l, const std::string& numerator)
      : std::runtime_error("exchange at " + l.to_string() + " is not divisible by the cluster variable"),
        label(l), numerator_text(numerator) {}
  Label label;
  std::string numerator_text;
};

class Quiver {
 public:
  Quiver(int n, GroupMode mode);

  int n() const { return n_; }
  GroupMode mode() const { return mode_; }
  const std::vector<Label>& nodes() const { return nodes_; }
  bool has_node(Label l) const;
  bool is_frozen(Label l) const { return frozen_.count(l) > 0; }
  void set_frozen(Label l, bool frozen);
  std::vector<Label> mutable_nodes() const;
  std::vector<Label> frozen_nodes() const;

  // Adds w arrows a -> b, cancelling against existing arrows b -> a.
  void add_arc(Label a, Label b, int w = 1);
  int weight(Label a, Label b) const;
  // Arcs with positive weight, keyed by (tail, head) in label order.
  const std::map<std::pair<Label, Label>, int>& arcs() const { return arcs_; }

 private:
  int n_;
  GroupMode mode_;
  std::vector<Label> nodes_;
  std::set<Label> frozen_;
  std::map<std::pair<Label, Label>, int> arcs_;
};

// Grid quiver with right, down and up-left diagonal arrows; arcs between
// two frozen vertices are dropped.
Quiver standard_quiver(int n, GroupMode mode = GroupMode::GL);
Quiver bd_quiver(const BDTriple& t);

struct ExchangeMatrix {
  // Mutable labels index rows; columns list mutable then frozen labels.
  std::vector<Label> rows;
  std::vector<Label> cols;
  std::vector<std::vector<int>> b;

  int row_index(Label l) const;
  int col_index(Label l) const;
  int at(Label row, Label col) const { return b[row_index(row)][col_index(col)]; }
  int num_mutable() const { return static_cast<int>(rows.size()); }
  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;
};

ExchangeMatrix to_exchange_matrix(const Quiver& q);
ExchangeMatrix mutate_matrix(const ExchangeMatrix& m, Label k);
bool principal_part_skew_symmetric(const ExchangeMatrix& m);
int rank(const ExchangeMatrix& m);

struct Seed {
  // Functions in the column order of the exchange matrix.
  std::vector<ClusterFunction> cluster;
  ExchangeMatrix exchange;

  const ClusterFunction& function(Label l) const { return cluster[exchange.col_index(l)]; }
};

Seed make_seed(const std::vector<ClusterFunction>& cluster, const Quiver& q);
Seed initial_seed(const BDTriple& t);
Seed standard_seed(int n, GroupMode mode = GroupMode::GL);

// Sum of the two exchange monomials at k.
Poly exchange_numerator(const Seed& s, Label k);

struct MutationResult {
  Seed seed;
  Poly exchanged;
};

// Throws NotLaurentPolynomial when the exchange relation does not divide.
MutationResult mutate_seed(const Seed& s, Label k);

std::string to_dot(const Quiver& q);

}  // namespace bdc
