#include "qsc/flag.hpp"

#include <sstream>
#include <stdexcept>

namespace qsc {

Flag::Flag(std::vector<int> ranks, int n) : ranks_(std::move(ranks)), n_(n) {
    if (ranks_.empty())
        throw std::invalid_argument("flag: need at least one quotient rank");
    int prev = 0;
    for (int r : ranks_) {
        if (r <= prev)
            throw std::invalid_argument("flag: ranks must be strictly increasing and positive");
        prev = r;
    }
    if (prev >= n_)
        throw std::invalid_argument("flag: top rank must be smaller than n");
    dim_ = 0;
    for (int j = 1; j <= k(); ++j)
        dim_ += (n_ - rank(j)) * (rank(j) - rank(j - 1));
}

Flag Flag::parse(const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos)
        throw std::invalid_argument("flag: expected \"n1,...,nk;n\", got \"" + text + "\"");
    std::vector<int> ranks;
    std::stringstream head(text.substr(0, semi));
    std::string field;
    while (std::getline(head, field, ',')) {
        try {
            ranks.push_back(std::stoi(field));
        } catch (const std::exception&) {
            throw std::invalid_argument("flag: bad rank \"" + field + "\"");
        }
    }
    int n;
    try {
        n = std::stoi(text.substr(semi + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("flag: bad ambient dimension in \"" + text + "\"");
    }
    return Flag(std::move(ranks), n);
}

int Flag::rank(int j) const {
    if (j < 0 || j > k() + 1) throw std::out_of_range("flag: rank index");
    if (j == 0) return 0;
    if (j == k() + 1) return n_;
    return ranks_[j - 1];
}

int Flag::q_degree(int j) const {
    if (j < 1 || j > k()) throw std::out_of_range("flag: q index");
    return rank(j + 1) - rank(j - 1);
}

int Flag::block_of(int pos) const {
    if (pos < 1 || pos > n_) throw std::out_of_range("flag: position");
    for (int j = 1; j <= k(); ++j)
        if (pos <= rank(j)) return j;
    return k() + 1;
}

bool Flag::is_standard_descent(int pos) const {
    for (int r : ranks_)
        if (r == pos) return true;
    return false;
}

std::string Flag::to_string() const {
    std::string s;
    for (size_t i = 0; i < ranks_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(ranks_[i]);
    }
    s += ';';
    s += std::to_string(n_);
    return s;
}

}  // namespace qsc
