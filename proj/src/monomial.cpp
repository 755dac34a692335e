#include "reso/monomial.hpp"

namespace reso {

int cmpLex(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.arity(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

int cmpDegLex(const Monomial& a, const Monomial& b) {
    uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    return cmpLex(a, b);
}

int cmpDegRevLex(const Monomial& a, const Monomial& b) {
    uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    // larger = smaller exponent on the last variable where they differ
    for (size_t i = a.arity(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

}  // namespace reso
