#include <stdio.h>

#include "quadbook.h"

int main(void) {
    QbGraph *g = qb_graph_new(4);
    for (uint32_t u = 0; u < 4; u++) {
        for (uint32_t v = u + 1; v < 4; v++) {
            qb_graph_add_edge(g, u, v);
        }
    }
    QbEmbedding *be = NULL;
    if (qb_embed(g, &be) != QB_STATUS_OK) {
        fprintf(stderr, "embed: %s\n", qb_last_error());
        qb_graph_free(g);
        return 1;
    }
    char *doc = qb_embedding_serialize(g, be);
    fputs(doc, stdout);
    int rc = qb_embedding_verify(g, be) == QB_STATUS_OK ? 0 : 1;
    qb_string_free(doc);
    qb_embedding_free(be);
    qb_graph_free(g);
    return rc;
}
