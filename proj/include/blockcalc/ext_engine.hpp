#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "blockcalc/module.hpp"

namespace blockcalc {

// Raised when a computation would need an object outside the finite window
// a realization can represent.
class WindowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DiamondError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Projective cover of the simple with the given inventory name.
template <class S>
using ProjectiveCoverOracle = std::function<ModuleRep<S>(const std::string&)>;

template <class S>
struct Resolution {
  // terms[j] is P_j; covers[j] lists the simples whose covers make up P_j.
  std::vector<ModuleRep<S>> terms;
  std::vector<std::vector<std::string>> covers;
  // maps[0] : P_0 -> M, maps[j] : P_j -> P_{j-1}.
  std::vector<Mat<S>> maps;
};

// Matrix of a generator on m (grading generators give diag(weights)).
template <class S>
Mat<S> generator_matrix(const AlgebraPresentation<S>& a, const ModuleRep<S>& m, int g);

template <class S>
Mat<S> evaluate_relation(const AlgebraPresentation<S>& a, const Relation<S>& rel, const ModuleRep<S>& m);

// Throws std::invalid_argument on missing generators or mis-sized matrices.
template <class S>
void validate_shape(const AlgebraPresentation<S>& a, const ModuleRep<S>& m);

template <class S>
bool respects_grading(const AlgebraPresentation<S>& a, const ModuleRep<S>& m);

template <class S>
bool check_relations(const AlgebraPresentation<S>& a, const ModuleRep<S>& m);

// Basis of Hom_A(m, n); each element is n.dim() x m.dim().
template <class S>
std::vector<Mat<S>> hom(const AlgebraPresentation<S>& a, const ModuleRep<S>& m, const ModuleRep<S>& n);

// Ext^1(m, n): classes of extensions 0 -> n -> e -> m -> 0.
template <class S>
ExtSpace<S> ext1(const AlgebraPresentation<S>& a, const ModuleRep<S>& m, const ModuleRep<S>& n);

template <class S>
bool is_cocycle(const AlgebraPresentation<S>& a, const ModuleRep<S>& m, const ModuleRep<S>& n, const Cocycle<S>& c);

template <class S>
bool is_coboundary(const AlgebraPresentation<S>& a, const ModuleRep<S>& m, const ModuleRep<S>& n,
                   const Cocycle<S>& c);

template <class S>
Cocycle<S> zero_cocycle(const AlgebraPresentation<S>& a, const ModuleRep<S>& m, const ModuleRep<S>& n);

// Module on n (+) m acting by [[n(g), c(g)], [0, m(g)]].
template <class S>
ModuleRep<S> extend(const AlgebraPresentation<S>& a, const ModuleRep<S>& m, const ModuleRep<S>& n,
                    const Cocycle<S>& c);

// Basis of the associative algebra generated by the action on m (weight
// projectors included).
template <class S>
std::vector<Mat<S>> image_algebra(const AlgebraPresentation<S>& a, const ModuleRep<S>& m);

// Weight-homogeneous basis of rad(m), as columns.
template <class S>
Mat<S> radical_submodule(const AlgebraPresentation<S>& a, const ModuleRep<S>& m);

// Semisimple layers J^k m / J^{k+1} m as modules, top first.
template <class S>
std::vector<ModuleRep<S>> radical_layer_modules(const AlgebraPresentation<S>& a, const ModuleRep<S>& m);

// Names of the simples making up a semisimple module, sorted.
template <class S>
std::vector<std::string> identify_semisimple(const AlgebraPresentation<S>& a, const ModuleRep<S>& m,
                                             const Inventory<S>& inv);

template <class S>
Layers radical_filtration(const AlgebraPresentation<S>& a, const ModuleRep<S>& m, const Inventory<S>& inv);

template <class S>
bool is_indecomposable(const AlgebraPresentation<S>& a, const ModuleRep<S>& m);

template <class S>
bool is_isomorphic(const AlgebraPresentation<S>& a, const ModuleRep<S>& m, const ModuleRep<S>& n);

// Indecomposable module with socle x, middle b (+) c and top x. Basis order
// is x (top), b, c, x (socle) and the action is block lower triangular.
template <class S>
ModuleRep<S> build_diamond(const AlgebraPresentation<S>& a, const NamedModule<S>& x, const NamedModule<S>& b,
                           const NamedModule<S>& c);

template <class S>
Resolution<S> minimal_resolution(const AlgebraPresentation<S>& a, const ModuleRep<S>& m, int length,
                                 const ProjectiveCoverOracle<S>& cover, const Inventory<S>& inv);

// dim Ext^s(m, n) for s = 0..smax from one resolution of m.
template <class S>
std::vector<int> ext_dims(const AlgebraPresentation<S>& a, const Resolution<S>& res, const ModuleRep<S>& n,
                          int smax);

template <class S>
int ext_s(const AlgebraPresentation<S>& a, const ModuleRep<S>& m, const ModuleRep<S>& n, int s,
          const ProjectiveCoverOracle<S>& cover, const Inventory<S>& inv);

}  // namespace blockcalc
