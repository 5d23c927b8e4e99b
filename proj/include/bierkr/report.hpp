/**
 * Structured pass/fail outcome of a theorem check.
 */

#ifndef BIERKR_REPORT_HPP
#define BIERKR_REPORT_HPP

#include <string>

namespace bierkr {

struct VerificationReport
{
    std::string theorem;           // which claim was checked
    std::string instance;          // human-readable instance parameters
    bool pass = false;
    long long matched_facets = 0;
    std::string certificate;       // on failure: the offending face/inequality

    static VerificationReport failure(std::string theorem, std::string instance,
                                      std::string certificate)
    {
        VerificationReport r;
        r.theorem = std::move(theorem);
        r.instance = std::move(instance);
        r.pass = false;
        r.certificate = std::move(certificate);
        return r;
    }
};

}  // namespace bierkr

#endif  // BIERKR_REPORT_HPP
