#pragma once

#include <compare>
#include <string>
#include <vector>

#include "bdcluster/polymat.hpp"

namespace bdc {

struct InvalidTriple : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class GroupMode { GL, SL };

// Minimal Belavin-Drinfeld triple on the Dynkin diagram A_{n-1} sending the
// simple root alpha to beta, with 1 <= alpha < beta <= n-1.
struct BDTriple {
  int n = 0;
  int alpha = 0;
  int beta = 0;
  GroupMode mode = GroupMode::GL;
  // Set when the triple was given with alpha > beta and swapped.
  bool transposed = false;
};

// Validates the indices and swaps alpha > beta into the transposed triple.
BDTriple make_triple(int n, int alpha, int beta, GroupMode mode = GroupMode::GL);

struct Label {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Label&, const Label&) = default;
  std::string to_string() const;
};

enum class FunctionKind { Standard, Theta, Psi, Mutated };
std::string to_string(FunctionKind k);

struct ClusterFunction {
  Label label;
  Poly value;
  bool frozen = false;
  FunctionKind kind = FunctionKind::Standard;
};

// Diagonal evaluates at X = Y; Double keeps the two copies apart.
enum class MatrixMode { Diagonal, Double };

bool is_first_family(const BDTriple& t, Label l);
bool is_second_family(const BDTriple& t, Label l);
// Frozen labels in row-major order.
std::vector<Label> frozen_labels(const BDTriple& t);
bool is_frozen(const BDTriple& t, Label l);
// Every label carried by the cluster, row-major; (1,1) is omitted in SL mode.
std::vector<Label> cluster_labels(int n, GroupMode mode);

PolyMatrix build_Mtilde(const BDTriple& t, int i, int j, MatrixMode mode = MatrixMode::Diagonal);
PolyMatrix build_Mtilde(const BDTriple& t, Label l, MatrixMode mode = MatrixMode::Diagonal);

// Closed forms of det of the special matrices, k in [1, alpha], m in [1, beta].
Poly theta(const BDTriple& t, int k, MatrixMode mode = MatrixMode::Diagonal);
Poly psi(const BDTriple& t, int m, MatrixMode mode = MatrixMode::Diagonal);

std::vector<ClusterFunction> standard_cluster(int n, GroupMode mode = GroupMode::GL);
std::vector<ClusterFunction> initial_cluster(const BDTriple& t);

const ClusterFunction& find_function(const std::vector<ClusterFunction>& cluster, Label l);

}  // namespace bdc
