#include <stdio.h>
#include <string.h>
#include "nakayama.h"

int main(void) {
    NkPresentation *p = NULL;
    if (nk_presentation_preset("pentagon", &p) != NK_STATUS_OK) return 1;
    int32_t n = 0;
    if (nk_nakayama_index(p, &n) != NK_STATUS_OK || n != 4) return 2;
    char *json = NULL;
    if (nk_classify_json(p, false, &json) != NK_STATUS_OK) return 3;
    if (strncmp(json, "{\"index\":4", 10) != 0) return 4;
    nk_string_free(json);
    nk_presentation_free(p);
    if (nk_presentation_preset("no_such_preset", &p) != NK_STATUS_VALIDATION) return 5;
    if (nk_last_error_message() == NULL) return 6;
    printf("ok\n");
    return 0;
}
