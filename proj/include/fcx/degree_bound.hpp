#ifndef FCX_DEGREE_BOUND_HPP
#define FCX_DEGREE_BOUND_HPP

#include <stdexcept>
#include <string>

namespace fcx {

// Degree cap selecting a stage of the forest-complex filtration:
// a finite cap d >= 0 or unbounded. Totally ordered with
// finite(0) < finite(1) < ... < unbounded().
class DegreeBound {
public:
    static DegreeBound finite(int d) {
        if (d < 0) throw std::invalid_argument("degree bound must be >= 0");
        return DegreeBound(d);
    }
    static DegreeBound unbounded() { return DegreeBound(kUnbounded); }

    bool is_unbounded() const { return d_ == kUnbounded; }
    bool is_finite() const { return d_ != kUnbounded; }

    int value() const {
        if (is_unbounded()) throw std::logic_error("unbounded degree cap has no value");
        return d_;
    }

    // True if a vertex of the given degree is allowed.
    bool allows(int degree) const { return is_unbounded() || degree <= d_; }

    bool operator==(const DegreeBound& o) const { return d_ == o.d_; }
    bool operator!=(const DegreeBound& o) const { return d_ != o.d_; }
    bool operator<(const DegreeBound& o) const {
        if (is_unbounded()) return false;
        if (o.is_unbounded()) return true;
        return d_ < o.d_;
    }
    bool operator<=(const DegreeBound& o) const { return *this < o || *this == o; }

    std::string to_string() const { return is_unbounded() ? "inf" : std::to_string(d_); }

    // Accepts "inf" (also "unbounded") or a decimal integer >= 0.
    static DegreeBound parse(const std::string& s) {
        if (s == "inf" || s == "unbounded" || s == "oo") return unbounded();
        std::size_t pos = 0;
        int d = 0;
        try {
            d = std::stoi(s, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad degree bound '" + s + "'");
        }
        if (pos != s.size() || d < 0)
            throw std::invalid_argument("bad degree bound '" + s + "'");
        return finite(d);
    }

private:
    static constexpr int kUnbounded = -1;
    explicit DegreeBound(int d) : d_(d) {}
    int d_;
};

} // namespace fcx

#endif // FCX_DEGREE_BOUND_HPP
