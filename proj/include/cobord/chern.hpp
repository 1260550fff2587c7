#pragma once

// Splitting-principle Chern classes.  A bundle expression is reduced to a
// multiset of formal roots; tensor products combine roots with the formal
// group law, duals apply [-1].

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cobord/fgl.hpp"
#include "cobord/series.hpp"

namespace cobord {

class Bundle {
public:
    enum class Kind { Line, Sum, Tensor, Dual, Trivial };

    static Bundle line(std::string root);
    static Bundle trivial(int rank);
    static Bundle sum(std::vector<Bundle> parts);
    static Bundle tensor(std::vector<Bundle> factors);
    static Bundle dual(Bundle inner);
    // k copies of e as a sum.
    static Bundle multiple(int k, const Bundle& e);

    Kind kind() const;
    int rank() const;
    const std::string& root() const;            // Line only
    const std::vector<Bundle>& children() const;  // Sum, Tensor, Dual
    std::string to_string() const;

private:
    struct Node;
    explicit Bundle(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Grammar: L(x) | 1^r | 1 | dual(e) | (e) | e * e | e + e, with * binding tighter.
Bundle parse_bundle(std::string_view text);

using RootMultiset = std::vector<Series>;

RootMultiset roots_of(const Bundle& e, const FormalGroupLaw& law);

// e_0 .. e_k of the given series; e_0 = 1.
std::vector<Series> elementary_symmetric(const std::vector<Series>& roots, int max_k, int bound);

Series chern_class(const Bundle& e, int i, const FormalGroupLaw& law);

// Rewrites f, symmetric in `roots`, as a series in the remaining variables of
// f followed by the elementary symmetric functions e1..ek (named by `names`,
// default "e1".."ek").  Throws NotSymmetric naming a transposition that moves f.
Series symmetric_reduce(const Series& f, const std::vector<std::string>& roots,
                        std::vector<std::string> names = {});

// s(x) = x + [-1](x) written as P(u) with u = x * [-1](x).
ExpressResult p_series(const FormalGroupLaw& law);

enum class Sp2Roots {
    Triple,   // r, s, t and u = [-1](r +F s +F t)
    Paired,   // r, [-1](r), s, [-1](s)
};

struct Sp2Result {
    std::vector<Series> d;  // d[0] = 1, d[k] = e_k of the four roots
    ExpressResult first;    // d1 in v2, v4
    ExpressResult third;    // d3 in v2, v4
    // Whether d1..d4 are invariant under permuting the free roots.
    bool symmetric = true;
};

Sp2Result sp2_series(const FormalGroupLaw& law, Sp2Roots config = Sp2Roots::Triple);

// c_1* .. c_n* in the variables c1..cn (weights 1..n).  Entry 0 is unused.
std::vector<Series> dual_chern_classes(int n, const FormalGroupLaw& law);
Series dual_chern(int n, int i, const FormalGroupLaw& law);

// Variables c1..cn with weights 1..n.
std::vector<SeriesVar> chern_vars(int n);

}  // namespace cobord
